#include "khcob/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace khcob::diagram {

const char* kind_name(DiagramError::Kind k) {
  switch (k) {
    case DiagramError::Kind::MalformedSyntax: return "MalformedSyntax";
    case DiagramError::Kind::ArcMultiplicityError: return "ArcMultiplicityError";
    case DiagramError::Kind::InconsistentOrientation: return "InconsistentOrientation";
    case DiagramError::Kind::NonPlanar: return "NonPlanar";
    case DiagramError::Kind::LengthMismatch: return "LengthMismatch";
    case DiagramError::Kind::NotAnEdge: return "NotAnEdge";
    case DiagramError::Kind::InvalidSite: return "InvalidSite";
    case DiagramError::Kind::NotCrossingless: return "NotCrossingless";
  }
  return "?";
}

namespace {

using K = DiagramError::Kind;

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

// Occurrences of every arc id in a PD list.
std::map<ArcId, std::vector<Occurrence>> occurrences(const std::vector<Crossing>& xs) {
  std::map<ArcId, std::vector<Occurrence>> occ;
  for (int c = 0; c < static_cast<int>(xs.size()); ++c)
    for (int s = 0; s < 4; ++s) occ[xs[c].arcs[s]].push_back({c, s});
  return occ;
}

Occurrence other_occurrence(const std::vector<Occurrence>& v, Occurrence o) {
  return v[0] == o ? v[1] : v[0];
}

}  // namespace

int LinkDiagram::n_plus() const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), 1));
}
int LinkDiagram::n_minus() const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

int LinkDiagram::arc_index(ArcId a) const {
  if (a <= 0 || a >= static_cast<ArcId>(index_.size())) return -1;
  return index_[a];
}

bool LinkDiagram::is_loop(ArcId a) const {
  return std::find(loops_.begin(), loops_.end(), a) != loops_.end();
}

std::vector<ArcId> LinkDiagram::component_arcs(int comp) const {
  std::vector<ArcId> seq;
  ArcId start = 0;
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    if (comp_[i] == comp) {
      start = arcs_[i];
      break;
    }
  if (start == 0) return seq;
  if (is_loop(start)) return {start};
  ArcId a = start;
  do {
    seq.push_back(a);
    auto h = head_[arc_index(a)];
    a = crossings_[h.crossing].arcs[(h.slot + 2) % 4];
  } while (a != start);
  return seq;
}

LinkDiagram LinkDiagram::make(std::vector<Crossing> crossings, std::vector<ArcId> loops) {
  LinkDiagram d;
  d.crossings_ = std::move(crossings);
  d.loops_ = std::move(loops);
  std::sort(d.loops_.begin(), d.loops_.end());

  auto occ = occurrences(d.crossings_);
  for (auto& [a, v] : occ) {
    if (a <= 0) throw DiagramError(K::MalformedSyntax, "arc ids must be positive");
    if (v.size() != 2)
      throw DiagramError(K::ArcMultiplicityError,
                         "arc " + std::to_string(a) + " appears " + std::to_string(v.size()) +
                             " times (expected 2)");
  }
  for (std::size_t i = 0; i < d.loops_.size(); ++i) {
    ArcId a = d.loops_[i];
    if (a <= 0) throw DiagramError(K::MalformedSyntax, "arc ids must be positive");
    if (occ.count(a) || (i > 0 && d.loops_[i - 1] == a))
      throw DiagramError(K::ArcMultiplicityError,
                         "loop arc " + std::to_string(a) + " is not fresh");
  }

  for (auto& [a, v] : occ) d.arcs_.push_back(a);
  d.arcs_.insert(d.arcs_.end(), d.loops_.begin(), d.loops_.end());
  std::sort(d.arcs_.begin(), d.arcs_.end());
  d.index_.assign(d.max_arc() + 1, -1);
  for (std::size_t i = 0; i < d.arcs_.size(); ++i) d.index_[d.arcs_[i]] = static_cast<int>(i);

  const std::size_t n = d.arcs_.size();
  d.tail_.assign(n, {});
  d.head_.assign(n, {});
  d.comp_.assign(n, -1);
  d.signs_.assign(d.crossings_.size(), 0);

  // Orientation: walk each component; under-passes enter at slot 0.
  int comp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d.comp_[i] >= 0) continue;
    ArcId start = d.arcs_[i];  // smallest unvisited id
    if (!occ.count(start)) {
      d.comp_[i] = comp++;
      continue;
    }
    struct Pass {
      int c, in, out;
    };
    std::vector<Pass> passes;
    std::vector<std::pair<ArcId, Occurrence>> heads;  // direction A: arc -> head
    Occurrence h = occ[start][0];
    ArcId a = start;
    while (true) {
      heads.push_back({a, h});
      d.comp_[d.index_[a]] = comp;
      int out = (h.slot + 2) % 4;
      passes.push_back({h.crossing, h.slot, out});
      ArcId next = d.crossings_[h.crossing].arcs[out];
      Occurrence t{h.crossing, out};
      h = other_occurrence(occ[next], t);
      a = next;
      if (a == start && h == heads.front().second) break;
      if (passes.size() > 4 * d.crossings_.size() + 4)
        throw DiagramError(K::InconsistentOrientation, "component walk does not close");
    }
    int fwd = 0, bwd = 0;
    for (auto& p : passes) {
      if (p.in == 0) ++fwd;
      if (p.in == 2) ++bwd;
    }
    if (fwd && bwd)
      throw DiagramError(K::InconsistentOrientation,
                         "component through arc " + std::to_string(start) +
                             " passes under in both directions");
    bool reverse;
    if (fwd || bwd) {
      reverse = bwd > 0;
    } else {
      // Only over-passes: the smallest arc's head is its smaller occurrence.
      Occurrence h0 = heads.front().second;
      Occurrence t0 = other_occurrence(occ[start], h0);
      reverse = std::pair(t0.crossing, t0.slot) < std::pair(h0.crossing, h0.slot);
    }
    for (auto& [arc, hd] : heads) {
      Occurrence tl = other_occurrence(occ[arc], hd);
      int idx = d.index_[arc];
      d.head_[idx] = reverse ? tl : hd;
      d.tail_[idx] = reverse ? hd : tl;
    }
    for (auto& p : passes) {
      int in = reverse ? p.out : p.in;
      if (in == 1) d.signs_[p.c] = 1;
      else if (in == 3) d.signs_[p.c] = -1;
    }
    ++comp;
  }
  d.components_ = comp;
  for (std::size_t c = 0; c < d.crossings_.size(); ++c)
    if (d.signs_[c] == 0)
      throw DiagramError(K::InconsistentOrientation,
                         "crossing " + std::to_string(c) + " has no over-strand pass");

  // Planarity: every piece with V crossings has V + 2 faces.
  auto fs = faces(d);
  auto pc = pieces(d);
  std::map<int, int> vcount, fcount;
  for (auto& x : d.crossings_) ++vcount[pc[d.index_[x.arcs[0]]]];
  for (auto& f : fs.faces) ++fcount[pc[d.index_[f.front().first]]];
  for (auto& [p, v] : vcount)
    if (fcount[p] != v + 2)
      throw DiagramError(K::NonPlanar, "PD code is not planar (piece with " + std::to_string(v) +
                                           " crossings has " + std::to_string(fcount[p]) +
                                           " faces)");
  return d;
}

std::string LinkDiagram::to_pd() const {
  std::ostringstream os;
  bool first = true;
  for (auto& x : crossings_) {
    if (!first) os << ' ';
    first = false;
    os << "X(" << x.arcs[0] << ',' << x.arcs[1] << ',' << x.arcs[2] << ',' << x.arcs[3] << ')';
  }
  for (auto a : loops_) {
    if (!first) os << ' ';
    first = false;
    os << "U(" << a << ')';
  }
  return os.str();
}

LinkDiagram parse_pd(const std::string& text) {
  std::vector<Crossing> xs;
  std::vector<ArcId> loops;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      } else if (text[i] == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else {
        break;
      }
    }
  };
  auto fail = [&](const std::string& msg) {
    throw DiagramError(K::MalformedSyntax, msg + " at offset " + std::to_string(i));
  };
  auto number = [&]() -> ArcId {
    skip();
    std::size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (s == i) fail("expected arc id");
    if (i - s > 9) fail("arc id too large");
    ArcId v = std::stoi(text.substr(s, i - s));
    if (v <= 0) fail("arc ids must be positive");
    return v;
  };
  auto expect = [&](char ch) {
    skip();
    if (i >= text.size() || text[i] != ch) fail(std::string("expected '") + ch + "'");
    ++i;
  };
  while (true) {
    skip();
    if (i >= text.size()) break;
    char c = text[i++];
    if (c == 'X') {
      expect('(');
      Crossing x{};
      for (int k = 0; k < 4; ++k) {
        if (k) expect(',');
        x.arcs[k] = number();
      }
      expect(')');
      xs.push_back(x);
    } else if (c == 'U') {
      expect('(');
      loops.push_back(number());
      expect(')');
    } else {
      --i;
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  return LinkDiagram::make(std::move(xs), std::move(loops));
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  ArcId shift = a.max_arc();
  auto xs = a.crossings();
  auto loops = a.loops();
  for (auto x : b.crossings()) {
    for (auto& v : x.arcs) v += shift;
    xs.push_back(x);
  }
  for (auto l : b.loops()) loops.push_back(l + shift);
  return LinkDiagram::make(std::move(xs), std::move(loops));
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> xs;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    auto a = d.crossings()[c].arcs;
    // The old over-strand becomes the under-strand; start at its incoming slot.
    if (d.sign(static_cast<int>(c)) > 0) xs.push_back({{a[1], a[2], a[3], a[0]}});
    else xs.push_back({{a[3], a[0], a[1], a[2]}});
  }
  return LinkDiagram::make(std::move(xs), d.loops());
}

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
  std::vector<ArcId> bottom(strands), cur(strands);
  ArcId next = 1;
  for (int s = 0; s < strands; ++s) bottom[s] = cur[s] = next++;
  std::vector<Crossing> xs;
  std::vector<bool> touched(strands, false);
  for (int g : word) {
    int i = std::abs(g) - 1;
    if (i < 0 || i + 1 >= strands) throw DiagramError(K::MalformedSyntax, "braid generator out of range");
    ArcId x = cur[i], y = cur[i + 1];
    ArcId tl = next++, tr = next++;
    // Strands run upward; positive = the left strand crosses over to the right.
    if (g > 0) xs.push_back({{y, x, tl, tr}});
    else xs.push_back({{x, tl, tr, y}});
    cur[i] = tl;
    cur[i + 1] = tr;
    touched[i] = touched[i + 1] = true;
  }
  // Close up: the top arc at each position is identified with the bottom one.
  std::map<ArcId, ArcId> rename;
  for (int s = 0; s < strands; ++s)
    if (cur[s] != bottom[s]) rename[cur[s]] = bottom[s];
  for (auto& x : xs)
    for (auto& a : x.arcs)
      if (auto it = rename.find(a); it != rename.end()) a = it->second;
  std::vector<ArcId> loops;
  for (int s = 0; s < strands; ++s)
    if (!touched[s]) loops.push_back(bottom[s]);
  // Compact ids to 1..n in order of first appearance.
  std::map<ArcId, ArcId> compact;
  ArcId k = 1;
  for (auto& x : xs)
    for (auto a : x.arcs)
      if (!compact.count(a)) compact[a] = k++;
  for (auto l : loops) compact[l] = k++;
  for (auto& x : xs)
    for (auto& a : x.arcs) a = compact[a];
  for (auto& l : loops) l = compact[l];
  return LinkDiagram::make(std::move(xs), std::move(loops));
}

std::string canonical_form(const LinkDiagram& d) {
  // Components with crossings, as arc cycles in orientation order.
  std::vector<std::vector<ArcId>> comps;
  int loop_count = 0;
  for (int c = 0; c < d.components(); ++c) {
    auto seq = d.component_arcs(c);
    if (seq.size() == 1 && d.is_loop(seq[0])) ++loop_count;
    else comps.push_back(seq);
  }
  std::vector<int> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::string best;
  bool have = false;
  do {
    // Odometer over start positions.
    std::vector<std::size_t> start(comps.size(), 0);
    while (true) {
      std::map<ArcId, ArcId> rel;
      ArcId next = 1;
      for (int ci : order) {
        const auto& seq = comps[ci];
        for (std::size_t k = 0; k < seq.size(); ++k)
          rel[seq[(start[ci] + k) % seq.size()]] = next++;
      }
      std::vector<std::array<ArcId, 4>> xs;
      for (auto& x : d.crossings())
        xs.push_back({rel[x.arcs[0]], rel[x.arcs[1]], rel[x.arcs[2]], rel[x.arcs[3]]});
      std::sort(xs.begin(), xs.end());
      std::ostringstream os;
      for (auto& x : xs) os << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ") ";
      for (int l = 0; l < loop_count; ++l) os << "U(" << next++ << ") ";
      std::string s = os.str();
      if (!have || s < best) {
        best = s;
        have = true;
      }
      std::size_t j = 0;
      while (j < comps.size()) {
        if (++start[j] < comps[j].size()) break;
        start[j] = 0;
        ++j;
      }
      if (j == comps.size()) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (!best.empty()) best.pop_back();
  return best;
}

bool isomorphic(const LinkDiagram& a, const LinkDiagram& b) {
  if (a.crossing_count() != b.crossing_count() || a.components() != b.components() ||
      a.arc_count() != b.arc_count())
    return false;
  return canonical_form(a) == canonical_form(b);
}

Resolution resolution_from_bits(const std::vector<int>& bits) {
  Resolution r = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) r |= Resolution{1} << i;
  return r;
}

ResolvedDiagram resolve(const LinkDiagram& d, Resolution r) {
  const std::size_t n = d.arc_count();
  UnionFind uf(n);
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const auto& a = d.crossings()[c].arcs;
    int i0 = d.arc_index(a[0]), i1 = d.arc_index(a[1]), i2 = d.arc_index(a[2]),
        i3 = d.arc_index(a[3]);
    if ((r >> c) & 1u) {
      uf.unite(i0, i1);
      uf.unite(i2, i3);
    } else {
      uf.unite(i0, i3);
      uf.unite(i1, i2);
    }
  }
  ResolvedDiagram rd;
  rd.circle_of_arc.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    int root = uf.find(static_cast<int>(i));
    if (id_of_root[root] < 0) {
      id_of_root[root] = rd.circle_count++;
      rd.circles.emplace_back();
    }
    rd.circle_of_arc[i] = id_of_root[root];
    rd.circles[id_of_root[root]].push_back(d.arcs()[i]);
  }
  return rd;
}

ResolvedDiagram resolve(const LinkDiagram& d, const std::vector<int>& bits) {
  if (bits.size() != d.crossing_count())
    throw DiagramError(K::LengthMismatch, "resolution length " + std::to_string(bits.size()) +
                                              " != crossing count " +
                                              std::to_string(d.crossing_count()));
  return resolve(d, resolution_from_bits(bits));
}

EdgeAction edge_action(const LinkDiagram& d, int c, const ResolvedDiagram& ri,
                       const ResolvedDiagram& rj) {
  const auto& a = d.crossings()[c].arcs;
  auto ci = [&](ArcId x) { return ri.circle_of_arc[d.arc_index(x)]; };
  auto cj = [&](ArcId x) { return rj.circle_of_arc[d.arc_index(x)]; };
  EdgeAction e;
  e.crossing = c;
  // In I (bit 0) the strands are (a,d) and (b,c); in J they are (a,b), (c,d).
  int x = ci(a[0]), y = ci(a[1]);
  if (x != y) {
    e.merge = true;
    e.from = {std::min(x, y), std::max(x, y)};
    e.to = {cj(a[0]), -1};
    if (ri.circle_count != rj.circle_count + 1)
      throw DiagramError(K::NotAnEdge, "merge edge with inconsistent circle counts");
  } else {
    int u = cj(a[0]), v = cj(a[2]);
    if (u == v) throw DiagramError(K::NotAnEdge, "non-orientable (1 -> 1) cube edge");
    e.merge = false;
    e.from = {x, -1};
    e.to = {std::min(u, v), std::max(u, v)};
  }
  e.passive.assign(ri.circle_count, -1);
  for (int k = 0; k < ri.circle_count; ++k) {
    if (k == e.from[0] || k == e.from[1]) continue;
    e.passive[k] = cj(ri.circles[k].front());
  }
  return e;
}

EdgeAction edge_action(const LinkDiagram& d, Resolution i, Resolution j) {
  Resolution diff = i ^ j;
  if (diff == 0 || (diff & (diff - 1)) || (j & diff) == 0)
    throw DiagramError(K::NotAnEdge, "resolutions are not the two ends of a cube edge");
  int c = 0;
  while (!((diff >> c) & 1u)) ++c;
  if (c >= static_cast<int>(d.crossing_count()))
    throw DiagramError(K::NotAnEdge, "edge crossing out of range");
  return edge_action(d, c, resolve(d, i), resolve(d, j));
}

std::vector<int> pieces(const LinkDiagram& d) {
  UnionFind uf(d.arc_count());
  for (auto& x : d.crossings())
    for (int s = 1; s < 4; ++s) uf.unite(d.arc_index(x.arcs[0]), d.arc_index(x.arcs[s]));
  std::vector<int> out(d.arc_count());
  for (std::size_t i = 0; i < d.arc_count(); ++i) out[i] = uf.find(static_cast<int>(i));
  return out;
}

Faces faces(const LinkDiagram& d) {
  const std::size_t n = d.arc_count();
  Faces f;
  f.left.assign(n, -1);
  f.right.assign(n, -1);
  // Traversal (arc, forward) arrives at the head; the next boundary arc of
  // the left face leaves from the clockwise-next slot.
  for (std::size_t i = 0; i < n; ++i) {
    ArcId a0 = d.arcs()[i];
    if (d.is_loop(a0)) continue;
    for (bool fwd0 : {true, false}) {
      if ((fwd0 ? f.left[i] : f.right[i]) >= 0) continue;
      int id = static_cast<int>(f.faces.size());
      f.faces.emplace_back();
      ArcId a = a0;
      bool fwd = fwd0;
      while (true) {
        int ai = d.arc_index(a);
        int& slot = fwd ? f.left[ai] : f.right[ai];
        if (slot >= 0) break;
        slot = id;
        f.faces.back().push_back({a, fwd});
        Occurrence arr = fwd ? d.head(a) : d.tail(a);
        Occurrence nxt{arr.crossing, (arr.slot + 1) % 4};
        ArcId b = d.crossings()[nxt.crossing].arcs[nxt.slot];
        fwd = d.tail(b) == nxt;
        a = b;
      }
    }
  }
  return f;
}

// ---- Laurent polynomials ----

LaurentPoly LaurentPoly::monomial(int exp, long long coeff) {
  LaurentPoly p;
  p.add(exp, coeff);
  return p;
}

void LaurentPoly::add(int exp, long long c) {
  if (c == 0) return;
  auto& v = t_[exp];
  v += c;
  if (v == 0) t_.erase(exp);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto [e, c] : o.t_) r.add(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto [e1, c1] : t_)
    for (auto [e2, c2] : o.t_) r.add(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly r;
  for (auto [e, c] : t_) r.add(-e, c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : t_) {
    long long ac = c < 0 ? -c : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << ac;
      continue;
    }
    if (ac != 1) os << ac << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

// Independent of resolve(): the state is a list of arc-to-arc joins and
// circles are counted by depth-first search at the leaves.
LaurentPoly kauffman_bracket_jones(const LinkDiagram& d) {
  const auto& xs = d.crossings();
  std::map<ArcId, int> vid;
  for (auto a : d.arcs()) vid.emplace(a, static_cast<int>(vid.size()));
  const int nv = static_cast<int>(vid.size());
  std::vector<std::vector<int>> adj(nv);
  std::vector<long long> counts;  // counts[w * (nv+1) + circles]
  const int k = static_cast<int>(xs.size());
  counts.assign(static_cast<std::size_t>(k + 1) * (nv + 1), 0);

  auto count_circles = [&]() {
    std::vector<char> seen(nv, 0);
    int circles = 0;
    std::vector<int> stack;
    for (int v = 0; v < nv; ++v) {
      if (seen[v]) continue;
      ++circles;
      stack.push_back(v);
      seen[v] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
    }
    return circles;
  };

  auto link = [&](ArcId a, ArcId b) {
    adj[vid[a]].push_back(vid[b]);
    adj[vid[b]].push_back(vid[a]);
  };
  auto unlink = [&](ArcId a, ArcId b) {
    adj[vid[a]].pop_back();
    adj[vid[b]].pop_back();
  };

  auto rec = [&](auto&& self, int c, int weight) -> void {
    if (c == k) {
      ++counts[static_cast<std::size_t>(weight) * (nv + 1) + count_circles()];
      return;
    }
    const auto& a = xs[c].arcs;
    link(a[0], a[3]);
    link(a[1], a[2]);
    self(self, c + 1, weight);
    unlink(a[1], a[2]);
    unlink(a[0], a[3]);
    link(a[0], a[1]);
    link(a[2], a[3]);
    self(self, c + 1, weight + 1);
    unlink(a[2], a[3]);
    unlink(a[0], a[1]);
  };
  rec(rec, 0, 0);

  LaurentPoly bracket;
  const LaurentPoly loop = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
  for (int w = 0; w <= k; ++w)
    for (int cc = 0; cc <= nv; ++cc) {
      long long n = counts[static_cast<std::size_t>(w) * (nv + 1) + cc];
      if (!n) continue;
      LaurentPoly term = LaurentPoly::monomial(w, (w % 2 ? -1 : 1) * n);
      for (int i = 0; i < cc; ++i) term = term * loop;
      bracket = bracket + term;
    }
  if (nv == 0) bracket = LaurentPoly::monomial(0);
  int np = d.n_plus(), nm = d.n_minus();
  return bracket * LaurentPoly::monomial(np - 2 * nm, nm % 2 ? -1 : 1);
}

}  // namespace khcob::diagram
