#pragma once
// Decorated cubes: oriented surgery arcs, change-of-decoration maps and a
// table-driven interface for higher differentials.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "khcob/tqft.hpp"

namespace khcob::szabo {

using diagram::Resolution;

// One bit per crossing: 0 orients the arc from the (a,d) strand of the
// 0-smoothing to the (b,c) strand, 1 the other way.
using Decoration = std::vector<std::uint8_t>;

class NotComparable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class RuleInconsistent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConfigArc {
  int crossing = -1;
  int tail = -1, head = -1;  // circles of D(I)
  int out_a = -1, out_c = -1;  // circles of D(J) through the two halves of the 1-smoothing
};

struct Configuration {
  Resolution from = 0, to = 0;
  int in_circles = 0, out_circles = 0;
  std::vector<ConfigArc> arcs;
  std::vector<int> passive;  // D(I) circle -> D(J) circle, -1 when an arc touches it

  int dimension() const { return static_cast<int>(arcs.size()); }
  std::vector<int> active_in() const;
  std::vector<int> active_out() const;
  // Active circles joined by the arcs form one component.
  bool connected() const;
};

Configuration face_configuration(const tqft::Cube& cube, Resolution i, Resolution j,
                                 const Decoration& t);
Configuration face_configuration(const diagram::LinkDiagram& d, Resolution i, Resolution j,
                                 const Decoration& t);

// Key "m:p:t-h/xy,..." over the active circles: m inputs, p outputs, one
// entry per arc (tail, head, the two output circles sorted), entries sorted.
// The minimum over relabelings of inputs and outputs.
struct Canonical {
  std::string key;
  std::vector<int> in_order, out_order;  // canonical position -> circle
};
Canonical canonical_form(const Configuration& c);
// Abstract configuration from a key (active circles only).
Configuration parse_key(const std::string& key);

class HigherRule {
 public:
  std::string name = "khovanov-only";
  // key -> (input labeling, output labeling) pairs over the canonical circle
  // orders, e.g. {"--", "-"}. Pairs with the same input add up.
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> table;

  static HigherRule khovanov_only();
  static HigherRule from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  int max_dimension() const { return max_dim_; }
  void refresh();  // recompute cached data after editing `table`

  // Output labelings of D(J) for labeling x of D(I). Dimension-1 faces
  // without a table entry use the Khovanov merge and split.
  std::vector<std::uint64_t> apply(const Configuration& c, std::uint64_t x) const;
  // Some key and a single-arc reversal of it are both in the table.
  bool orientation_dependent() const;

 private:
  int max_dim_ = 1;
};

// H_c on the Khovanov cube: merge v-v- -> v-, split v+ -> v+v+, zero
// otherwise; G = Id + H.
struct HMaps {
  chain::SparseMap h, g;
};
HMaps h_map(const tqft::Cube& cube, int crossing);
HMaps h_map(const diagram::LinkDiagram& d, int crossing);

// Generators and order as in the Khovanov cube. When the rule contributes
// entries of dimension >= 2 the homological degree becomes h - (q - q0)/2,
// q0 the smallest q, so that every entry raises it by one.
chain::FilteredComplex decorated_complex(const diagram::LinkDiagram& d, const Decoration& t,
                                         const HigherRule& rule);
chain::FilteredComplex decorated_complex(const tqft::Cube& cube, const Decoration& t,
                                         const HigherRule& rule);

// Composite of G_c over the crossings where t and t2 differ, lowest first.
chain::SparseMap change_decoration(const tqft::Cube& cube, const Decoration& t,
                                   const Decoration& t2);

struct RuleCheck {
  std::string name;
  std::string status;  // "pass", "fail", "untestable"
  std::string witness;
};
struct RuleReport {
  std::vector<RuleCheck> checks;
  bool ok() const;
};
// Dimension-1 agreement, disconnected rule, d^2 = 0, unit-then-saddle
// identity and, when the table allows it, the change-of-decoration identity.
RuleReport verify_rule(const HigherRule& rule, const std::vector<diagram::LinkDiagram>& corpus);

}  // namespace khcob::szabo
