#pragma once
// Rank-2 Frobenius rules over F2 and the cube-of-resolutions functor.
//
// Labels: 0 = v+ (q-degree +1), 1 = v- (q-degree -1). A labeling of the
// circles of a resolution is a bitmask, bit c set when circle c carries v-.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "khcob/chaincx.hpp"
#include "khcob/diagram.hpp"

namespace khcob::tqft {

using chain::Index;

// Small dense F2 linear map between tensor powers of V. Basis words carry
// factor i in bit i; col[w] is the image of word w as a bitmask over words.
struct Lin {
  int n_in = 0, n_out = 0;
  std::vector<std::uint32_t> col;
  static Lin identity(int n);
  bool operator==(const Lin&) const = default;
};
Lin operator*(const Lin& g, const Lin& f);  // g ∘ f
Lin operator+(const Lin& a, const Lin& b);
Lin tensor(const Lin& a, const Lin& b);     // a acts on the low factors

class FrobeniusRule {
 public:
  std::string name;
  // m[2a+b]: bitmask of output labels; delta[a]: bitmask over pairs 2x+y;
  // unit: bitmask of labels; counit[a]: value on label a.
  std::uint8_t m[4] = {0, 0, 0, 0};
  std::uint8_t delta[2] = {0, 0};
  std::uint8_t unit = 1;
  std::uint8_t counit[2] = {0, 1};

  static FrobeniusRule khovanov();
  static FrobeniusRule bar_natan();
  // {"name", "m": {"++": ["+"], ...}, "delta": {"+": ["+-", ...], ...},
  //  "unit": ["+"], "counit": {"+": 0, "-": 1}}. Throws RuleError on bad
  // syntax or when check_axioms() is nonempty.
  static FrobeniusRule from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  // Names of the violated axioms; empty when the rule is a filtered
  // commutative Frobenius algebra with unit v+ and counit dual to v-.
  std::vector<std::string> check_axioms() const;

  Lin m_lin() const;
  Lin delta_lin() const;
  Lin unit_lin() const;
  Lin counit_lin() const;
};

class RuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 2^26 unless KHCOB_GENERATOR_CAP is set.
std::uint64_t default_generator_cap();

struct Cube {
  diagram::LinkDiagram diagram;
  FrobeniusRule rule;
  std::vector<diagram::ResolvedDiagram> vertices;
  std::vector<std::uint64_t> offset;  // 2^k + 1 entries
  chain::ComplexPtr complex;
  Index index(diagram::Resolution r, std::uint64_t labels) const {
    return static_cast<Index>(offset[r] + labels);
  }
};
using CubePtr = std::shared_ptr<const Cube>;

// Generators ordered by resolution, then labeling. Tag "bits|labels", e.g.
// "011|+-" (crossing 0 first, circle 0 first).
CubePtr build_cube(const diagram::LinkDiagram& d, const FrobeniusRule& rule,
                   std::uint64_t cap = default_generator_cap());
chain::FilteredComplex cube_complex(const diagram::LinkDiagram& d, const FrobeniusRule& rule);
std::string generator_tag(diagram::Resolution r, int crossings, std::uint64_t labels,
                          int circles);
int quantum_degree(const diagram::LinkDiagram& d, diagram::Resolution r, std::uint64_t labels,
                   int circles);

// Output labelings of the saddle along an edge applied to `labels`.
std::vector<std::uint64_t> apply_saddle(const FrobeniusRule& rule, const diagram::EdgeAction& e,
                                        std::uint64_t labels);

// Handle and relabel maps between the cubes of mv.before and mv.after. The
// result is verified to be a filtered chain map of q-degree +1 (0- and
// 2-handles), -1 (1-handles) or 0 (relabel).
chain::FilteredChainMap handle_map(const Cube& src, const Cube& dst,
                                   const diagram::MoveResult& mv);
chain::FilteredChainMap handle_map(const diagram::LinkDiagram& d, const diagram::Move& m,
                                   const FrobeniusRule& rule);

// The complex rebuilt as iterated cones over the crossings (last crossing
// outermost). Same generator order as the cube.
chain::FilteredComplex iterated_cone(const diagram::LinkDiagram& d, const FrobeniusRule& rule);

// Cube index in cube(a ⊔ b) of each generator of tensor(cube(a), cube(b)),
// where ab = disjoint_union(a, b).
std::vector<chain::Index> union_correspondence(const Cube& a, const Cube& b, const Cube& ab);

// Closed connected genus-g surface: counit ∘ (m∘Δ)^g ∘ unit.
int evaluate_closed(const FrobeniusRule& rule, int genus);
// The four-tube relation on every assignment of four disks to 1..4 circles.
bool check_4tu(const FrobeniusRule& rule);

}  // namespace khcob::tqft
