#include "khcob/movie.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <variant>

namespace khcob::movie {

namespace dg = khcob::diagram;
using chain::FilteredChainMap;
using chain::Index;
using chain::SparseMap;

// ---- movies ----

Movie Movie::make(dg::LinkDiagram initial, std::vector<dg::Move> moves, std::string name) {
  Movie m;
  m.name = std::move(name);
  m.initial = std::move(initial);
  m.moves = std::move(moves);
  m.frames.push_back(m.initial);
  for (const auto& mv : m.moves) {
    m.steps.push_back(dg::apply_move(m.frames.back(), mv));
    m.frames.push_back(m.steps.back().after);
  }
  return m;
}

Movie concatenate(const Movie& a, const Movie& b) {
  if (!(a.final_frame() == b.initial))
    throw FrameMismatch("concatenate: final frame of the first movie is not the initial frame of the second");
  auto moves = a.moves;
  moves.insert(moves.end(), b.moves.begin(), b.moves.end());
  return Movie::make(a.initial, std::move(moves), a.name + "+" + b.name);
}

namespace {

dg::Side parse_side(const std::string& s) {
  if (s == "L" || s == "left") return dg::Side::left;
  if (s == "R" || s == "right") return dg::Side::right;
  throw MovieError("expected a side (L or R), got '" + s + "'");
}

dg::Direction parse_dir(const std::string& s) {
  if (s == "ins") return dg::Direction::insert;
  if (s == "del") return dg::Direction::remove;
  throw MovieError("expected ins or del, got '" + s + "'");
}

dg::ArcId parse_arc(const std::string& s) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || v <= 0) throw MovieError("expected a positive arc id, got '" + s + "'");
  return static_cast<dg::ArcId>(v);
}

std::string strip_comment(const std::string& line) {
  auto p = line.find('#');
  std::string s = p == std::string::npos ? line : line.substr(0, p);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

dg::Move parse_move(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tok;
  for (std::string t; is >> t;) tok.push_back(t);
  if (tok.empty()) throw MovieError("empty move");
  const auto& op = tok[0];
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (tok.size() < lo || tok.size() > hi) throw MovieError("wrong number of fields: '" + line + "'");
  };
  if (op == "relabel") {
    dg::Relabel r;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      auto p = tok[i].find("->");
      if (p == std::string::npos) throw MovieError("relabel entries look like a->b: '" + tok[i] + "'");
      r.mapping[parse_arc(tok[i].substr(0, p))] = parse_arc(tok[i].substr(p + 2));
    }
    return r;
  }
  if (op == "h0") {
    need(1, 1);
    return dg::Handle0{};
  }
  if (op == "h1") {
    need(3, 3);
    return dg::Handle1{parse_arc(tok[1]), parse_arc(tok[2])};
  }
  if (op == "h2") {
    need(2, 2);
    return dg::Handle2{parse_arc(tok[1])};
  }
  if (op == "r1") {
    need(4, 5);
    dg::R1 r;
    r.arc = parse_arc(tok[1]);
    if (tok[2] == "+") r.sign = 1;
    else if (tok[2] == "-") r.sign = -1;
    else if (tok[2] == "*") r.sign = 0;
    else throw MovieError("r1 sign must be +, - or *");
    r.dir = parse_dir(tok[3]);
    if (tok.size() == 5) r.side = parse_side(tok[4]);
    if (r.dir == dg::Direction::insert && r.sign == 0) throw MovieError("r1 ins needs a sign");
    return r;
  }
  if (op == "r2") {
    if (tok.size() != 4 && tok.size() != 6) throw MovieError("wrong number of fields: '" + line + "'");
    dg::R2 r;
    r.over = parse_arc(tok[1]);
    r.under = parse_arc(tok[2]);
    r.dir = parse_dir(tok[3]);
    if (tok.size() == 6) {
      r.over_side = parse_side(tok[4]);
      r.under_side = parse_side(tok[5]);
    }
    return r;
  }
  if (op == "r3") {
    need(4, 4);
    return dg::R3{{parse_arc(tok[1]), parse_arc(tok[2]), parse_arc(tok[3])}};
  }
  throw MovieError("unknown move '" + op + "'");
}

Movie parse_movie(const std::string& text, std::string name) {
  std::istringstream is(text);
  std::optional<dg::LinkDiagram> initial;
  std::vector<dg::Move> moves;
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    auto line = strip_comment(raw);
    if (line.empty()) continue;
    try {
      if (!initial) initial = dg::parse_pd(line);
      else moves.push_back(parse_move(line));
    } catch (const MovieError& e) {
      throw MovieError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!initial) throw MovieError("movie has no initial diagram");
  return Movie::make(*initial, std::move(moves), std::move(name));
}

std::string format_movie(const Movie& m) {
  std::string s = m.initial.to_pd() + "\n";
  for (auto& mv : m.moves) s += dg::describe(mv) + "\n";
  return s;
}

// ---- Reidemeister maps ----

namespace {

[[noreturn]] void failed(const std::string& what) { throw ConstructionFailed(what); }

struct LocalReduction {
  chain::Reduction red;
  std::vector<Index> survivors;  // reduced index -> big index
};

// Cancels, along the elimination crossings, every edge that creates or
// absorbs a circle made of local arcs only: a split creating O pairs x with
// the O = v- half, a merge of O into X pairs O = v+ with the merged circle.
LocalReduction reduce_local(const tqft::Cube& big, const std::set<dg::ArcId>& local,
                            const std::vector<int>& elim) {
  const auto& d = big.diagram;
  auto is_local = [&](const dg::ResolvedDiagram& r, int circle) {
    for (auto a : r.circles[circle])
      if (!local.count(a)) return false;
    return true;
  };
  std::vector<std::pair<Index, Index>> pivots;
  std::vector<char> used(big.complex->size(), 0);
  for (std::uint64_t r = 0; r < big.vertices.size(); ++r) {
    const auto& R = big.vertices[r];
    for (int c : elim) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      if (r & bit) continue;
      const auto& S = big.vertices[r | bit];
      auto e = dg::edge_action(d, c, R, S);
      int o = -1, x = -1;
      if (!e.merge) {
        if (is_local(S, e.to[0])) o = e.to[0], x = e.to[1];
        else if (is_local(S, e.to[1])) o = e.to[1], x = e.to[0];
      } else {
        if (is_local(R, e.from[0])) o = e.from[0], x = e.from[1];
        else if (is_local(R, e.from[1])) o = e.from[1], x = e.from[0];
      }
      if (o < 0) continue;
      for (std::uint64_t lab = 0; lab < (std::uint64_t{1} << R.circle_count); ++lab) {
        std::uint64_t base = 0;
        for (std::size_t i = 0; i < e.passive.size(); ++i)
          if (e.passive[i] >= 0 && ((lab >> i) & 1)) base |= std::uint64_t{1} << e.passive[i];
        Index a, b;
        if (!e.merge) {
          std::uint64_t l = (lab >> e.from[0]) & 1;
          a = big.index(r, lab);
          b = big.index(r | bit, base | (l << x) | (std::uint64_t{1} << o));
        } else {
          if ((lab >> o) & 1) continue;
          std::uint64_t l = (lab >> x) & 1;
          a = big.index(r, lab);
          b = big.index(r | bit, base | (l << e.to[0]));
        }
        if (used[a] || used[b]) continue;
        used[a] = used[b] = 1;
        pivots.emplace_back(a, b);
      }
    }
  }
  chain::Eliminator el(*big.complex, true);
  try {
    for (auto [a, b] : pivots) el.cancel(a, b);
  } catch (const chain::ChainError& e) {
    failed(std::string("local elimination: ") + e.what());
  }
  LocalReduction lr{el.finish(big.complex, true), {}};
  for (Index i = 0; i < big.complex->size(); ++i)
    if (el.alive(i)) lr.survivors.push_back(i);
  return lr;
}

// Circles of a vertex as sets of arcs under `arc_map` (0 = drop), with labels.
using CircleKey = std::vector<std::pair<std::vector<dg::ArcId>, int>>;

CircleKey circle_key(const tqft::Cube& cube, std::uint64_t r, std::uint64_t labels,
                     const std::map<dg::ArcId, dg::ArcId>& arc_map) {
  const auto& R = cube.vertices[r];
  CircleKey key;
  for (int c = 0; c < R.circle_count; ++c) {
    std::vector<dg::ArcId> arcs;
    for (auto a : R.circles[c]) {
      auto it = arc_map.find(a);
      dg::ArcId m = it == arc_map.end() ? a : it->second;
      if (m) arcs.push_back(m);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    if (arcs.empty()) continue;  // a local circle whose label the elimination fixed
    key.emplace_back(std::move(arcs), static_cast<int>((labels >> c) & 1));
  }
  std::sort(key.begin(), key.end());
  return key;
}

// Endpoints of non-local arcs at the local crossings, paired through the
// smoothed local region at resolution r. An endpoint is (arc, 1) at the
// arc's head and (arc, 0) at its tail.
using Matching = std::vector<std::pair<std::pair<dg::ArcId, int>, std::pair<dg::ArcId, int>>>;

Matching local_matching(const dg::LinkDiagram& d, std::uint64_t r, const std::set<int>& lc,
                        const std::set<dg::ArcId>& local) {
  auto partner = [&](int c, int s) {
    if ((r >> c) & 1) return s ^ 1;  // (0,1), (2,3)
    return 3 - s;                     // (0,3), (1,2)
  };
  auto end_of = [&](int c, int s) {
    dg::ArcId a = d.crossings()[c].arcs[s];
    return std::make_pair(a, d.head(a) == dg::Occurrence{c, s} ? 1 : 0);
  };
  Matching m;
  for (int c : lc)
    for (int s = 0; s < 4; ++s) {
      dg::ArcId a = d.crossings()[c].arcs[s];
      if (local.count(a)) continue;
      int cc = c, ss = s;
      for (;;) {
        ss = partner(cc, ss);
        dg::ArcId b = d.crossings()[cc].arcs[ss];
        if (!local.count(b)) break;
        dg::Occurrence o = d.head(b) == dg::Occurrence{cc, ss} ? d.tail(b) : d.head(b);
        cc = o.crossing;
        ss = o.slot;
      }
      auto e1 = end_of(c, s), e2 = end_of(cc, ss);
      if (e1 < e2) m.emplace_back(e1, e2);
    }
  std::sort(m.begin(), m.end());
  return m;
}

// (vertex, labeling) of a cube generator.
std::pair<std::uint64_t, std::uint64_t> locate(const tqft::Cube& cube, Index g) {
  auto it = std::upper_bound(cube.offset.begin(), cube.offset.end(), std::uint64_t{g});
  std::uint64_t r = static_cast<std::uint64_t>(it - cube.offset.begin()) - 1;
  return {r, g - cube.offset[r]};
}

// Small-side generator matching a big-side survivor: same non-local
// resolution bits and the same circles after mapping arcs to the small side.
Index match_small(const tqft::Cube& big, const tqft::Cube& small, Index g,
                  const std::vector<int>& big_to_small_crossing,
                  const std::map<dg::ArcId, dg::ArcId>& big_to_small_arc) {
  auto [r, lab] = locate(big, g);
  std::uint64_t rs = 0;
  for (std::size_t c = 0; c < big_to_small_crossing.size(); ++c)
    if (big_to_small_crossing[c] >= 0 && ((r >> c) & 1))
      rs |= std::uint64_t{1} << big_to_small_crossing[c];
  const auto &R = big.vertices[r], &S = small.vertices[rs];
  std::vector<int> seen(S.circle_count, 0);
  std::uint64_t ls = 0;
  int kept = 0;
  for (int c = 0; c < R.circle_count; ++c) {
    int target = -1;
    for (auto a : R.circles[c]) {
      auto it = big_to_small_arc.find(a);
      dg::ArcId m = it == big_to_small_arc.end() ? a : it->second;
      if (!m) continue;
      int t = S.circle_of_arc[small.diagram.arc_index(m)];
      if (target >= 0 && t != target) failed("survivor circle spans two small circles");
      target = t;
    }
    if (target < 0) continue;  // local circle, its label is fixed by the elimination
    ++kept;
    if (seen[target]++) failed("two survivor circles map to one small circle");
    if ((lab >> c) & 1) ls |= std::uint64_t{1} << target;
  }
  if (kept != S.circle_count) failed("circle counts differ");
  return small.index(rs, ls);
}

SparseMap permutation(const std::vector<Index>& to, std::size_t rows) {
  std::vector<std::pair<Index, Index>> e;
  for (std::size_t i = 0; i < to.size(); ++i) e.emplace_back(to[i], static_cast<Index>(i));
  return SparseMap::from_entries(rows, to.size(), e);
}

void check_perm(const std::vector<Index>& to, const chain::FilteredComplex& from_c,
                const chain::FilteredComplex& to_c) {
  if (to.size() != to_c.size()) failed("survivor count differs from the other side");
  std::vector<char> hit(to_c.size(), 0);
  for (std::size_t i = 0; i < to.size(); ++i) {
    if (hit[to[i]]++) failed("survivor matching is not injective");
    const auto &a = from_c.gen(i), &b = to_c.gen(to[i]);
    if (a.h != b.h || a.q != b.q) failed("matched generators have different gradings: " + a.tag +
                                         " vs " + b.tag);
  }
}

std::map<dg::ArcId, dg::ArcId> arc_map_from(const dg::LinkDiagram& d,
                                            const std::vector<dg::ArcId>& dense) {
  std::map<dg::ArcId, dg::ArcId> m;
  for (std::size_t i = 0; i < dense.size(); ++i) m[d.arcs()[i]] = dense[i];
  return m;
}

}  // namespace

ReidemeisterMaps reidemeister_map(const tqft::Cube& src, const tqft::Cube& dst,
                                  const dg::MoveResult& mv, bool solve) {
  if (!dg::is_reidemeister(mv.move))
    throw dg::DiagramError(dg::DiagramError::Kind::InvalidSite, "reidemeister_map: not an R-move");
  ReidemeisterMaps out;
  if (std::holds_alternative<dg::R3>(mv.move)) {
    const auto& tri = std::get<dg::R3>(mv.move).triangle;
    std::set<dg::ArcId> local(tri.begin(), tri.end());
    std::set<int> lc;
    for (auto a : tri) {
      lc.insert(src.diagram.tail(a).crossing);
      lc.insert(src.diagram.head(a).crossing);
    }
    std::vector<int> elim;
    for (int c : lc)
      if (c != mv.distinguished) elim.push_back(c);
    std::uint64_t lmask = 0;
    for (int c : lc) lmask |= std::uint64_t{1} << c;
    auto L = reduce_local(src, local, elim);
    auto R = reduce_local(dst, local, elim);
    auto keyed = [&](const tqft::Cube& cube, Index g, const std::map<dg::ArcId, dg::ArcId>& am) {
      auto [r, lab] = locate(cube, g);
      return std::make_tuple(r & ~lmask, std::popcount(r & lmask),
                             local_matching(cube.diagram, r, lc, local), circle_key(cube, r, lab, am));
    };
    std::map<dg::ArcId, dg::ArcId> drop;
    for (auto a : tri) drop[a] = 0;
    std::map<decltype(keyed(dst, 0, drop)), Index> rindex;
    for (std::size_t i = 0; i < R.survivors.size(); ++i)
      if (!rindex.emplace(keyed(dst, R.survivors[i], drop), static_cast<Index>(i)).second)
        failed("R3 survivors are not distinguished by their circles");
    std::vector<Index> sigma;
    for (auto g : L.survivors) {
      auto it = rindex.find(keyed(src, g, drop));
      if (it == rindex.end()) failed("R3 survivor without a partner: " + src.complex->gen(g).tag);
      sigma.push_back(it->second);
    }
    check_perm(sigma, *L.red.reduced, *R.red.reduced);
    auto P = permutation(sigma, R.red.reduced->size());
    if (!(P * L.red.reduced->d() == R.red.reduced->d() * P))
      failed("R3: reduced differentials do not agree");
    out.rho = {src.complex, dst.complex, R.red.iota.matrix * P * L.red.pi.matrix, 0, 0};
    out.rho_prime = {dst.complex, src.complex, L.red.iota.matrix * P.transpose() * R.red.pi.matrix, 0, 0};
    out.h_source = L.red.homotopy;
    out.h_target = R.red.homotopy;
  } else {
    // One side has the local crossings; reduce it and match with the other.
    bool insert = std::holds_alternative<dg::R1>(mv.move)
                      ? std::get<dg::R1>(mv.move).dir == dg::Direction::insert
                      : std::get<dg::R2>(mv.move).dir == dg::Direction::insert;
    const tqft::Cube& big = insert ? dst : src;
    const tqft::Cube& small = insert ? src : dst;
    const auto& site = insert ? mv.site_after : mv.site_before;
    std::set<dg::ArcId> local(site.begin(), site.end());
    std::vector<int> to_small = insert ? mv.crossing_origin : mv.crossing_image;
    std::vector<int> elim;
    if (insert) {
      for (std::size_t c = 0; c < mv.crossing_origin.size(); ++c)
        if (mv.crossing_origin[c] < 0) elim.push_back(static_cast<int>(c));
    } else {
      for (std::size_t c = 0; c < mv.crossing_image.size(); ++c)
        if (mv.crossing_image[c] < 0) elim.push_back(static_cast<int>(c));
    }
    auto arcs = insert ? arc_map_from(mv.after, mv.arc_origin) : arc_map_from(mv.before, mv.arc_image);
    auto B = reduce_local(big, local, elim);
    std::vector<Index> sigma;
    for (auto g : B.survivors) sigma.push_back(match_small(big, small, g, to_small, arcs));
    check_perm(sigma, *B.red.reduced, *small.complex);
    auto P = permutation(sigma, small.complex->size());
    if (!(P * B.red.reduced->d() == small.complex->d() * P))
      failed("reduced differential does not match the other side");
    auto to_small_map = P * B.red.pi.matrix;
    auto from_small = B.red.iota.matrix * P.transpose();
    SparseMap zero_small(small.complex->size(), small.complex->size());
    if (insert) {
      out.rho = {src.complex, dst.complex, from_small, 0, 0};
      out.rho_prime = {dst.complex, src.complex, to_small_map, 0, 0};
      out.h_source = zero_small;
      out.h_target = B.red.homotopy;
    } else {
      out.rho = {src.complex, dst.complex, to_small_map, 0, 0};
      out.rho_prime = {dst.complex, src.complex, from_small, 0, 0};
      out.h_source = B.red.homotopy;
      out.h_target = zero_small;
    }
  }
  for (auto* f : {&out.rho, &out.rho_prime}) {
    auto rep = chain::verify_map(*f, true);
    if (!rep.ok()) failed("constructed map is not a filtered chain map: " + rep.summary());
  }
  auto back = chain::compose(out.rho_prime, out.rho);
  auto fwd = chain::compose(out.rho, out.rho_prime);
  if (solve) {
    auto h = chain::homotopic(back, chain::identity_map(src.complex));
    if (!h) failed("solver found no homotopy rho' rho ~ id");
    out.h_source = *h;
  }
  if (!chain::is_homotopy(back, chain::identity_map(src.complex), out.h_source))
    failed("rho' rho is not homotopic to the identity via the recorded homotopy");
  if (!chain::is_homotopy(fwd, chain::identity_map(dst.complex), out.h_target))
    failed("rho rho' is not homotopic to the identity via the recorded homotopy");
  return out;
}

ReidemeisterMaps reidemeister_map(const dg::LinkDiagram& d, const dg::Move& m,
                                  const tqft::FrobeniusRule& rule, bool solve) {
  auto mv = dg::apply_move(d, m);
  return reidemeister_map(*tqft::build_cube(mv.before, rule), *tqft::build_cube(mv.after, rule), mv,
                          solve);
}

FilteredChainMap move_map(const tqft::Cube& src, const tqft::Cube& dst, const dg::MoveResult& mv) {
  if (dg::is_reidemeister(mv.move)) return reidemeister_map(src, dst, mv, false).rho;
  return tqft::handle_map(src, dst, mv);
}

FilteredChainMap induced_map(const Movie& m, const tqft::FrobeniusRule& rule) {
  auto cur = tqft::build_cube(m.initial, rule);
  FilteredChainMap f = chain::identity_map(cur->complex);
  for (const auto& step : m.steps) {
    auto next = tqft::build_cube(step.after, rule);
    f = chain::compose(move_map(*cur, *next, step), f);
    cur = next;
  }
  return f;
}

namespace {

// Position in `to` of each crossing of `from`, when the diagrams agree up to
// the order of their crossings.
std::optional<std::vector<int>> crossing_order(const dg::LinkDiagram& from,
                                               const dg::LinkDiagram& to) {
  if (from.loops() != to.loops() || from.crossing_count() != to.crossing_count())
    return std::nullopt;
  std::vector<int> pos(from.crossing_count(), -1);
  std::vector<bool> used(to.crossing_count(), false);
  for (std::size_t i = 0; i < from.crossing_count(); ++i) {
    for (std::size_t j = 0; j < to.crossing_count(); ++j) {
      if (!used[j] && from.crossings()[i] == to.crossings()[j]) {
        pos[i] = static_cast<int>(j);
        used[j] = true;
        break;
      }
    }
    if (pos[i] < 0) return std::nullopt;
  }
  return pos;
}

// Isomorphism of cubes induced by reordering crossings. Circles are ordered by
// their smallest arc, so labelings carry over unchanged.
FilteredChainMap reorder_map(const tqft::Cube& src, const tqft::Cube& dst,
                             const std::vector<int>& pos) {
  SparseMap m(dst.complex->size(), src.complex->size());
  const std::size_t k = pos.size();
  for (dg::Resolution r = 0; r < (dg::Resolution{1} << k); ++r) {
    dg::Resolution r2 = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (r >> i & 1) r2 |= dg::Resolution{1} << pos[i];
    const std::uint64_t n = src.offset[r + 1] - src.offset[r];
    for (std::uint64_t x = 0; x < n; ++x) m.toggle(dst.index(r2, x), src.index(r, x));
  }
  return {src.complex, dst.complex, std::move(m), 0, 0};
}

}  // namespace

std::pair<FilteredChainMap, FilteredChainMap> comparable_maps(const Movie& a, const Movie& b,
                                                              const tqft::FrobeniusRule& rule) {
  if (!(a.initial == b.initial)) throw FrameMismatch("movies start at different diagrams");
  auto pos = crossing_order(b.final_frame(), a.final_frame());
  if (!pos) throw FrameMismatch("movies end at different diagrams");
  auto fa = induced_map(a, rule), fb = induced_map(b, rule);
  if (b.final_frame() != a.final_frame())
    fb = chain::compose(reorder_map(*tqft::build_cube(b.final_frame(), rule),
                                    *tqft::build_cube(a.final_frame(), rule), *pos),
                        fb);
  // Same complex objects on both sides, so the maps can be added and compared.
  fb.source = fa.source;
  fb.target = fa.target;
  return {std::move(fa), std::move(fb)};
}

std::optional<SparseMap> verify_movie_move(const Movie& a, const Movie& b,
                                           const tqft::FrobeniusRule& rule) {
  auto [fa, fb] = comparable_maps(a, b, rule);
  if (fa.q_degree != fb.q_degree) return std::nullopt;
  return chain::homotopic(fa, fb);
}

}  // namespace khcob::movie
