#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "khcob/diagram.hpp"

namespace khcob::diagram {

namespace {

using K = DiagramError::Kind;

[[noreturn]] void invalid(const std::string& msg) { throw DiagramError(K::InvalidSite, msg); }

const char* side_name(Side s) { return s == Side::left ? "L" : "R"; }

// Mutable PD working copy.
struct Pd {
  std::vector<Crossing> xs;
  std::vector<ArcId> loops;
  explicit Pd(const LinkDiagram& d) : xs(d.crossings()), loops(d.loops()) {}
  ArcId& at(Occurrence o) { return xs[o.crossing].arcs[o.slot]; }
  void drop_loop(ArcId a) { loops.erase(std::find(loops.begin(), loops.end(), a)); }
};

MoveResult finish(const LinkDiagram& before, const Move& m, Pd pd,
                  const std::map<ArcId, ArcId>& origin, const std::map<ArcId, ArcId>& image,
                  std::vector<int> crossing_origin) {
  MoveResult r;
  r.before = before;
  r.move = m;
  try {
    r.after = LinkDiagram::make(std::move(pd.xs), std::move(pd.loops));
  } catch (const DiagramError& e) {
    invalid(std::string("move produces an invalid diagram: ") + e.what());
  }
  // Arcs not mentioned in the maps keep their id.
  for (auto a : r.after.arcs()) {
    auto it = origin.find(a);
    ArcId o = it != origin.end() ? it->second : a;
    r.arc_origin.push_back(o && before.has_arc(o) ? o : 0);
  }
  for (auto a : before.arcs()) {
    auto it = image.find(a);
    ArcId o = it != image.end() ? it->second : a;
    r.arc_image.push_back(o && r.after.has_arc(o) ? o : 0);
  }
  r.crossing_origin = std::move(crossing_origin);
  r.crossing_image.assign(before.crossing_count(), -1);
  for (std::size_t c = 0; c < r.crossing_origin.size(); ++c)
    if (r.crossing_origin[c] >= 0) r.crossing_image[r.crossing_origin[c]] = static_cast<int>(c);
  return r;
}

std::vector<int> identity_crossings(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void require_arc(const LinkDiagram& d, ArcId a) {
  if (!d.has_arc(a)) invalid("arc " + std::to_string(a) + " does not exist");
}

bool same_piece(const LinkDiagram& d, ArcId a, ArcId b) {
  if (d.is_loop(a) || d.is_loop(b)) return false;
  auto p = pieces(d);
  return p[d.arc_index(a)] == p[d.arc_index(b)];
}

MoveResult do_relabel(const LinkDiagram& d, const Relabel& m) {
  std::map<ArcId, ArcId> f;
  for (auto a : d.arcs()) f[a] = a;
  for (auto [from, to] : m.mapping) {
    require_arc(d, from);
    if (to <= 0) invalid("relabel target must be positive");
    f[from] = to;
  }
  std::set<ArcId> targets;
  for (auto [a, b] : f) targets.insert(b);
  if (targets.size() != f.size()) invalid("relabel is not a bijection");
  Pd pd(d);
  for (auto& x : pd.xs)
    for (auto& a : x.arcs) a = f[a];
  for (auto& l : pd.loops) l = f[l];
  std::map<ArcId, ArcId> origin;
  for (auto [a, b] : f) origin[b] = a;
  return finish(d, m, std::move(pd), origin, f, identity_crossings(d.crossing_count()));
}

MoveResult do_h0(const LinkDiagram& d, const Handle0& m) {
  Pd pd(d);
  ArcId fresh = d.max_arc() + 1;
  pd.loops.push_back(fresh);
  auto r = finish(d, m, std::move(pd), {{fresh, 0}}, {}, identity_crossings(d.crossing_count()));
  r.site_after = {fresh};
  return r;
}

MoveResult do_h2(const LinkDiagram& d, const Handle2& m) {
  require_arc(d, m.loop);
  if (!d.is_loop(m.loop))
    throw DiagramError(K::NotCrossingless,
                       "arc " + std::to_string(m.loop) + " lies on a component with crossings");
  Pd pd(d);
  pd.drop_loop(m.loop);
  auto r = finish(d, m, std::move(pd), {}, {{m.loop, 0}}, identity_crossings(d.crossing_count()));
  r.site_before = {m.loop};
  return r;
}

MoveResult do_h1(const LinkDiagram& d, const Handle1& m) {
  ArcId a = m.a, b = m.b;
  require_arc(d, a);
  require_arc(d, b);
  Pd pd(d);
  std::map<ArcId, ArcId> origin, image;
  std::vector<ArcId> site_after;
  bool la = d.is_loop(a), lb = d.is_loop(b);
  if (a == b) {
    // Split a small circle off the arc.
    ArcId fresh = d.max_arc() + 1;
    pd.loops.push_back(fresh);
    origin[fresh] = 0;
    site_after = {a, fresh};
  } else if (la || lb) {
    // A crossingless circle is absorbed into the other arc.
    ArcId gone = la ? (lb ? std::max(a, b) : a) : b;
    ArcId kept = gone == a ? b : a;
    pd.drop_loop(gone);
    image[gone] = kept;
    site_after = {kept};
  } else {
    if (same_piece(d, a, b)) {
      auto fs = faces(d);
      int ia = d.arc_index(a), ib = d.arc_index(b);
      if (fs.left[ia] != fs.left[ib] && fs.right[ia] != fs.right[ib])
        invalid("arcs " + std::to_string(a) + " and " + std::to_string(b) +
                " do not bound a common face with compatible orientations");
    }
    // a' runs tail(a) -> head(b), b' runs tail(b) -> head(a).
    Occurrence ha = d.head(a), hb = d.head(b);
    pd.at(hb) = a;
    pd.at(ha) = b;
    site_after = {a, b};
  }
  auto r = finish(d, m, std::move(pd), origin, image, identity_crossings(d.crossing_count()));
  r.site_before = a == b ? std::vector<ArcId>{a} : std::vector<ArcId>{a, b};
  r.site_after = site_after;
  // The ids are reused, but the arcs touched by the surgery are new arcs.
  return r;
}

MoveResult do_r1(const LinkDiagram& d, const R1& m) {
  require_arc(d, m.arc);
  Pd pd(d);
  if (m.dir == Direction::insert) {
    if (m.sign != 1 && m.sign != -1) invalid("R1 insertion needs a sign");
    ArcId e = m.arc, l = d.max_arc() + 1, e2 = d.max_arc() + 2;
    if (d.is_loop(e)) {
      e2 = e;
      pd.drop_loop(e);
    } else {
      pd.at(d.head(e)) = e2;
    }
    Crossing x;
    if (m.sign > 0 && m.side == Side::left) x = {{e, l, l, e2}};
    else if (m.sign < 0 && m.side == Side::right) x = {{e, e2, l, l}};
    else if (m.sign > 0) x = {{l, e, e2, l}};
    else x = {{l, l, e2, e}};
    pd.xs.push_back(x);
    auto co = identity_crossings(d.crossing_count());
    co.push_back(-1);
    auto r = finish(d, m, std::move(pd), {{l, 0}, {e2, e}}, {}, co);
    r.site_after = {l};
    return r;
  }
  ArcId l = m.arc;
  if (d.is_loop(l)) invalid("arc " + std::to_string(l) + " is a crossingless loop");
  Occurrence t = d.tail(l), h = d.head(l);
  if (t.crossing != h.crossing || ((t.slot - h.slot + 4) % 4 != 1 && (h.slot - t.slot + 4) % 4 != 1))
    invalid("arc " + std::to_string(l) + " is not the loop of a kink");
  int c = t.crossing;
  if (m.sign != 0 && d.sign(c) != m.sign) invalid("kink has the opposite sign");
  ArcId x = 0, y = 0;  // x enters the kink, y leaves it
  for (int s = 0; s < 4; ++s) {
    if (s == t.slot || s == h.slot) continue;
    ArcId a = d.crossings()[c].arcs[s];
    if (d.head(a) == Occurrence{c, s}) x = a;
    else y = a;
  }
  std::map<ArcId, ArcId> image{{l, 0}};
  if (x == y) {
    pd.loops.push_back(x);
  } else {
    pd.at(d.head(y)) = x;
    image[y] = x;
  }
  pd.xs.erase(pd.xs.begin() + c);
  std::vector<int> co;
  for (int i = 0; i < static_cast<int>(d.crossing_count()); ++i)
    if (i != c) co.push_back(i);
  auto r = finish(d, m, std::move(pd), {}, image, co);
  r.site_before = {l};
  return r;
}

MoveResult do_r2_insert(const LinkDiagram& d, const R2& m) {
  ArcId p = m.over, q = m.under;
  require_arc(d, p);
  require_arc(d, q);
  if (p == q) invalid("R2 needs two different arcs");
  Side sp = m.over_side.value_or(Side::left), sq = m.under_side.value_or(Side::left);
  if (same_piece(d, p, q)) {
    auto fs = faces(d);
    int ip = d.arc_index(p), iq = d.arc_index(q);
    auto face_of = [&](int i, Side s) { return s == Side::left ? fs.left[i] : fs.right[i]; };
    if (m.over_side && m.under_side) {
      if (face_of(ip, sp) != face_of(iq, sq)) invalid("the given sides are not a common face");
    } else {
      bool found = false;
      for (Side a : {Side::left, Side::right}) {
        if (m.over_side && a != *m.over_side) continue;
        for (Side b : {Side::left, Side::right}) {
          if (m.under_side && b != *m.under_side) continue;
          if (!found && face_of(ip, a) == face_of(iq, b)) {
            sp = a;
            sq = b;
            found = true;
          }
        }
      }
      if (!found)
        invalid("arcs " + std::to_string(p) + " and " + std::to_string(q) +
                " do not share a face");
    }
  }
  Pd pd(d);
  ArcId f = d.max_arc() + 1;
  ArcId qm = f, q2 = f + 1, pm = f + 2, p2 = f + 3;
  if (d.is_loop(q)) {
    q2 = q;
    pd.drop_loop(q);
  } else {
    pd.at(d.head(q)) = q2;
  }
  if (d.is_loop(p)) {
    p2 = p;
    pd.drop_loop(p);
  } else {
    pd.at(d.head(p)) = p2;
  }
  ArcId q1 = q, p1 = p;
  Crossing cl, cr;
  if (sq == Side::left && sp == Side::right) {
    cl = {{q1, p1, qm, pm}};
    cr = {{qm, p2, q2, pm}};
  } else if (sq == Side::left) {
    cl = {{q1, p2, qm, pm}};
    cr = {{qm, p1, q2, pm}};
  } else if (sp == Side::left) {
    cl = {{q1, pm, qm, p1}};
    cr = {{qm, pm, q2, p2}};
  } else {
    cl = {{q1, pm, qm, p2}};
    cr = {{qm, pm, q2, p1}};
  }
  pd.xs.push_back(cl);
  pd.xs.push_back(cr);
  auto co = identity_crossings(d.crossing_count());
  co.push_back(-1);
  co.push_back(-1);
  auto r = finish(d, m, std::move(pd), {{qm, 0}, {pm, 0}, {q2, q}, {p2, p}}, {}, co);
  r.site_after = {pm, qm};
  return r;
}

MoveResult do_r2_remove(const LinkDiagram& d, const R2& m) {
  ArcId pm = m.over, qm = m.under;
  require_arc(d, pm);
  require_arc(d, qm);
  if (pm == qm || d.is_loop(pm) || d.is_loop(qm)) invalid("R2 removal needs two bigon arcs");
  Occurrence pt = d.tail(pm), ph = d.head(pm), qt = d.tail(qm), qh = d.head(qm);
  if (pt.crossing == ph.crossing) invalid("over arc starts and ends at one crossing");
  if (pt.slot % 2 == 0 || ph.slot % 2 == 0) invalid("arc " + std::to_string(pm) + " is not over at both ends");
  if (qt.slot % 2 == 1 || qh.slot % 2 == 1) invalid("arc " + std::to_string(qm) + " is not under at both ends");
  std::set<int> cp{pt.crossing, ph.crossing}, cq{qt.crossing, qh.crossing};
  if (cp != cq) invalid("arcs do not connect the same two crossings");
  auto fs = faces(d);
  bool bigon = false;
  for (auto& f : fs.faces) {
    if (f.size() != 2) continue;
    std::set<ArcId> s{f[0].first, f[1].first};
    if (s == std::set<ArcId>{pm, qm}) bigon = true;
  }
  if (!bigon) invalid("arcs do not bound a bigon");
  const auto& X = d.crossings();
  ArcId p1 = X[pt.crossing].arcs[(pt.slot + 2) % 4];
  ArcId p2 = X[ph.crossing].arcs[(ph.slot + 2) % 4];
  ArcId q1 = X[qt.crossing].arcs[(qt.slot + 2) % 4];
  ArcId q2 = X[qh.crossing].arcs[(qh.slot + 2) % 4];
  // Merge the strand pieces; representative = arc entering the site.
  std::map<ArcId, ArcId> rep;
  auto find = [&](ArcId a) {
    while (rep.count(a) && rep[a] != a) a = rep[a];
    return a;
  };
  auto unite = [&](ArcId keep, ArcId other) {
    keep = find(keep);
    other = find(other);
    if (keep != other) rep[other] = keep;
    rep.emplace(keep, keep);
  };
  unite(p1, p2);
  unite(q1, q2);
  if (find(q1) == find(p1)) {
    // The two strands belong to one piece of the link; p1 stays representative.
  }
  Pd pd(d);
  std::vector<int> co;
  for (int i = 0; i < static_cast<int>(d.crossing_count()); ++i)
    if (!cp.count(i)) co.push_back(i);
  std::vector<Crossing> kept;
  for (int i : co) kept.push_back(pd.xs[i]);
  pd.xs = kept;
  std::map<ArcId, ArcId> image{{pm, 0}, {qm, 0}};
  for (ArcId a : {p1, p2, q1, q2}) image[a] = find(a);
  for (auto& x : pd.xs)
    for (auto& a : x.arcs)
      if (image.count(a) && image[a]) a = image[a];
  for (ArcId r : {find(p1), find(q1)}) {
    bool used = false;
    for (auto& x : pd.xs)
      for (auto a : x.arcs) used |= a == r;
    if (!used && std::find(pd.loops.begin(), pd.loops.end(), r) == pd.loops.end())
      pd.loops.push_back(r);
  }
  auto r = finish(d, m, std::move(pd), {}, image, co);
  r.site_before = {pm, qm};
  return r;
}

MoveResult do_r3(const LinkDiagram& d, const R3& m) {
  const auto& tri = m.triangle;
  std::set<ArcId> ts(tri.begin(), tri.end());
  if (ts.size() != 3) invalid("R3 needs three different arcs");
  for (auto a : tri) {
    require_arc(d, a);
    if (d.is_loop(a)) invalid("R3 arc is a crossingless loop");
  }
  auto fs = faces(d);
  bool triangle = false;
  for (auto& f : fs.faces) {
    if (f.size() != 3) continue;
    std::set<ArcId> s{f[0].first, f[1].first, f[2].first};
    if (s == ts) triangle = true;
  }
  if (!triangle) invalid("arcs do not bound a triangular face");
  std::set<int> cs;
  int top = -1, mid = -1, bot = -1;
  for (int i = 0; i < 3; ++i) {
    Occurrence t = d.tail(tri[i]), h = d.head(tri[i]);
    cs.insert(t.crossing);
    cs.insert(h.crossing);
    int overs = (t.slot % 2) + (h.slot % 2);
    (overs == 2 ? top : overs == 0 ? bot : mid) = i;
  }
  if (cs.size() != 3 || top < 0 || mid < 0 || bot < 0)
    invalid("triangle does not have one top, one middle and one bottom strand");
  Pd pd(d);
  const auto& X = d.crossings();
  for (auto s : tri) {
    Occurrence t = d.tail(s), h = d.head(s);
    ArcId s_in = X[t.crossing].arcs[(t.slot + 2) % 4];
    ArcId s_out = X[h.crossing].arcs[(h.slot + 2) % 4];
    pd.xs[t.crossing].arcs[t.slot] = s_out;
    pd.xs[t.crossing].arcs[(t.slot + 2) % 4] = s;
    pd.xs[h.crossing].arcs[h.slot] = s_in;
    pd.xs[h.crossing].arcs[(h.slot + 2) % 4] = s;
  }
  std::map<ArcId, ArcId> local{{tri[0], 0}, {tri[1], 0}, {tri[2], 0}};
  auto r = finish(d, m, std::move(pd), local, local, identity_crossings(d.crossing_count()));
  r.site_before = r.site_after = {tri[0], tri[1], tri[2]};
  // The crossing shared by the top and middle segments.
  Occurrence tt = d.tail(tri[top]), th = d.head(tri[top]);
  Occurrence mt = d.tail(tri[mid]), mh = d.head(tri[mid]);
  for (int c : {tt.crossing, th.crossing})
    if (c == mt.crossing || c == mh.crossing) r.distinguished = c;
  return r;
}

}  // namespace

bool is_reidemeister(const Move& m) {
  return std::holds_alternative<R1>(m) || std::holds_alternative<R2>(m) ||
         std::holds_alternative<R3>(m);
}

std::string describe(const Move& m) {
  std::ostringstream os;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Relabel>) {
          os << "relabel";
          for (auto [a, b] : v.mapping) os << ' ' << a << "->" << b;
        } else if constexpr (std::is_same_v<T, Handle0>) {
          os << "h0";
        } else if constexpr (std::is_same_v<T, Handle1>) {
          os << "h1 " << v.a << ' ' << v.b;
        } else if constexpr (std::is_same_v<T, Handle2>) {
          os << "h2 " << v.loop;
        } else if constexpr (std::is_same_v<T, R1>) {
          os << "r1 " << v.arc << ' ' << (v.sign > 0 ? "+" : v.sign < 0 ? "-" : "*") << ' '
             << (v.dir == Direction::insert ? "ins" : "del");
          if (v.dir == Direction::insert) os << ' ' << side_name(v.side);
        } else if constexpr (std::is_same_v<T, R2>) {
          os << "r2 " << v.over << ' ' << v.under << ' '
             << (v.dir == Direction::insert ? "ins" : "del");
          if (v.over_side && v.under_side)
            os << ' ' << side_name(*v.over_side) << ' ' << side_name(*v.under_side);
        } else {
          os << "r3 " << v.triangle[0] << ' ' << v.triangle[1] << ' ' << v.triangle[2];
        }
      },
      m);
  return os.str();
}

MoveResult apply_move(const LinkDiagram& d, const Move& m) {
  return std::visit(
      [&](const auto& v) -> MoveResult {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Relabel>) return do_relabel(d, v);
        else if constexpr (std::is_same_v<T, Handle0>) return do_h0(d, v);
        else if constexpr (std::is_same_v<T, Handle1>) return do_h1(d, v);
        else if constexpr (std::is_same_v<T, Handle2>) return do_h2(d, v);
        else if constexpr (std::is_same_v<T, R1>) return do_r1(d, v);
        else if constexpr (std::is_same_v<T, R2>)
          return v.dir == Direction::insert ? do_r2_insert(d, v) : do_r2_remove(d, v);
        else return do_r3(d, v);
      },
      m);
}

}  // namespace khcob::diagram
