#pragma once
// Oriented link diagrams as PD codes, their resolutions, faces and
// elementary moves. The PD convention is in docs/pd-format.md.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace khcob::diagram {

using ArcId = int;

class DiagramError : public std::runtime_error {
 public:
  enum class Kind {
    MalformedSyntax,
    ArcMultiplicityError,
    InconsistentOrientation,
    NonPlanar,
    LengthMismatch,
    NotAnEdge,
    InvalidSite,
    NotCrossingless,
  };
  DiagramError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};
const char* kind_name(DiagramError::Kind k);

struct Crossing {
  std::array<ArcId, 4> arcs;  // from the incoming under-strand, clockwise
  bool operator==(const Crossing&) const = default;
};

struct Occurrence {
  int crossing = -1;
  int slot = -1;
  bool operator==(const Occurrence&) const = default;
};

class LinkDiagram {
 public:
  LinkDiagram() = default;  // the empty diagram
  // Validates multiplicity, orientation and planarity.
  static LinkDiagram make(std::vector<Crossing> crossings, std::vector<ArcId> loops);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<ArcId>& loops() const { return loops_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  int sign(std::size_t i) const { return signs_[i]; }
  int n_plus() const;
  int n_minus() const;
  int writhe() const { return n_plus() - n_minus(); }
  int components() const { return components_; }

  // Sorted arc ids; dense index = position in this list.
  const std::vector<ArcId>& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }
  int arc_index(ArcId a) const;  // -1 if absent
  bool has_arc(ArcId a) const { return arc_index(a) >= 0; }
  bool is_loop(ArcId a) const;
  ArcId max_arc() const { return arcs_.empty() ? 0 : arcs_.back(); }

  // Oriented endpoints of a crossing arc (undefined for loops).
  Occurrence tail(ArcId a) const { return tail_[arc_index(a)]; }
  Occurrence head(ArcId a) const { return head_[arc_index(a)]; }
  int component_of(ArcId a) const { return comp_[arc_index(a)]; }
  // Arc sequence of a component in orientation order.
  std::vector<ArcId> component_arcs(int comp) const;

  std::string to_pd() const;
  bool operator==(const LinkDiagram& o) const {
    return crossings_ == o.crossings_ && loops_ == o.loops_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::vector<ArcId> loops_;
  std::vector<int> signs_;
  std::vector<ArcId> arcs_;
  std::vector<int> index_;  // arc id -> dense index or -1
  std::vector<Occurrence> tail_, head_;
  std::vector<int> comp_;
  int components_ = 0;
};

LinkDiagram parse_pd(const std::string& text);
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);
LinkDiagram mirror(const LinkDiagram& d);
// Braid closure; generators are 1-based, negative = inverse.
LinkDiagram braid_closure(int strands, const std::vector<int>& word);
bool isomorphic(const LinkDiagram& a, const LinkDiagram& b);
std::string canonical_form(const LinkDiagram& d);

// Resolution bits: crossing i <-> bit i.
using Resolution = std::uint64_t;
Resolution resolution_from_bits(const std::vector<int>& bits);

struct ResolvedDiagram {
  std::vector<int> circle_of_arc;  // dense arc index -> circle
  int circle_count = 0;
  std::vector<std::vector<ArcId>> circles;  // ordered by smallest arc id
};

ResolvedDiagram resolve(const LinkDiagram& d, Resolution r);
ResolvedDiagram resolve(const LinkDiagram& d, const std::vector<int>& bits);

struct EdgeAction {
  bool merge = false;
  int crossing = -1;
  std::array<int, 2> from{-1, -1};  // circles of resolve(D,I); from[1] = -1 for a split
  std::array<int, 2> to{-1, -1};    // circles of resolve(D,J); to[1] = -1 for a merge
  std::vector<int> passive;         // I circle -> J circle, -1 for the active ones
};

EdgeAction edge_action(const LinkDiagram& d, Resolution i, Resolution j);
EdgeAction edge_action(const LinkDiagram& d, int crossing, const ResolvedDiagram& ri,
                       const ResolvedDiagram& rj);

// Faces of the planar diagram (loops excluded). A face is a cyclic list of
// (arc, forward) traversals with the face on the traveller's left.
struct Faces {
  std::vector<std::vector<std::pair<ArcId, bool>>> faces;
  std::vector<int> left, right;  // by dense arc index, -1 for loops
};
Faces faces(const LinkDiagram& d);
// Connected pieces of the crossing graph: dense arc index -> piece id (loops get their own).
std::vector<int> pieces(const LinkDiagram& d);

class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exp, long long coeff = 1);
  const std::map<int, long long>& terms() const { return t_; }
  void add(int exp, long long c);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
  LaurentPoly invert_variable() const;
  std::string to_string() const;

 private:
  std::map<int, long long> t_;
};

// Unnormalized Jones polynomial by skein recursion over smoothings.
LaurentPoly kauffman_bracket_jones(const LinkDiagram& d);

// ---- elementary moves ----
enum class Direction { insert, remove };
enum class Side { left, right };

struct Relabel {
  std::map<ArcId, ArcId> mapping;  // unmentioned arcs keep their id
};
struct Handle0 {};
struct Handle1 {
  ArcId a = 0, b = 0;
};
struct Handle2 {
  ArcId loop = 0;
};
struct R1 {
  ArcId arc = 0;  // insert: arc to kink; remove: the kink's loop arc
  int sign = 0;   // +1/-1; 0 on removal = don't check
  Side side = Side::left;
  Direction dir = Direction::insert;
};
struct R2 {
  ArcId over = 0, under = 0;  // insert: the arcs; remove: the two bigon arcs
  Direction dir = Direction::insert;
  std::optional<Side> over_side, under_side;  // side of the shared face
};
struct R3 {
  std::array<ArcId, 3> triangle{};
};

using Move = std::variant<Relabel, Handle0, Handle1, Handle2, R1, R2, R3>;
std::string describe(const Move& m);
bool is_reidemeister(const Move& m);

struct MoveResult {
  LinkDiagram before, after;
  Move move;
  std::vector<ArcId> arc_origin;   // dense `after` arc -> `before` arc id, 0 if local/new
  std::vector<ArcId> arc_image;    // dense `before` arc -> `after` arc id, 0 if local/removed
  std::vector<int> crossing_origin;  // `after` crossing -> `before` crossing, -1 if new
  std::vector<int> crossing_image;   // `before` crossing -> `after` crossing, -1 if removed
  std::vector<ArcId> site_before, site_after;  // handle sites / local arcs of R-moves
  int distinguished = -1;  // R3: crossing (same index on both sides) used for the cone
};

MoveResult apply_move(const LinkDiagram& d, const Move& m);

}  // namespace khcob::diagram
