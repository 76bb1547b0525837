#include "khcob/tqft.hpp"

#include <bit>
#include <cstdlib>
#include <set>
#include <variant>

namespace khcob::tqft {

namespace dg = khcob::diagram;

// ---- small linear maps ----

Lin Lin::identity(int n) {
  Lin l{n, n, std::vector<std::uint32_t>(std::size_t{1} << n)};
  for (std::size_t w = 0; w < l.col.size(); ++w) l.col[w] = std::uint32_t{1} << w;
  return l;
}

Lin operator*(const Lin& g, const Lin& f) {
  if (f.n_out != g.n_in) throw RuleError("Lin: factor count mismatch");
  Lin r{f.n_in, g.n_out, std::vector<std::uint32_t>(f.col.size(), 0)};
  for (std::size_t w = 0; w < f.col.size(); ++w)
    for (std::uint32_t s = f.col[w]; s; s &= s - 1) r.col[w] ^= g.col[std::countr_zero(s)];
  return r;
}

Lin operator+(const Lin& a, const Lin& b) {
  if (a.n_in != b.n_in || a.n_out != b.n_out) throw RuleError("Lin: factor count mismatch");
  Lin r = a;
  for (std::size_t w = 0; w < r.col.size(); ++w) r.col[w] ^= b.col[w];
  return r;
}

Lin tensor(const Lin& a, const Lin& b) {
  Lin r{a.n_in + b.n_in, a.n_out + b.n_out,
        std::vector<std::uint32_t>(std::size_t{1} << (a.n_in + b.n_in), 0)};
  const std::uint32_t lo = (1u << a.n_in) - 1;
  for (std::size_t w = 0; w < r.col.size(); ++w)
    for (std::uint32_t s = a.col[w & lo]; s; s &= s - 1)
      for (std::uint32_t t = b.col[w >> a.n_in]; t; t &= t - 1) {
        std::uint32_t u = std::countr_zero(s), v = std::countr_zero(t);
        r.col[w] ^= std::uint32_t{1} << (u | (v << a.n_out));
      }
  return r;
}

namespace {

Lin swap2() {
  Lin l{2, 2, {1u << 0, 1u << 2, 1u << 1, 1u << 3}};
  return l;
}

// op (k factors -> k factors) acting on the factors `pos` of an n-fold tensor.
Lin on_factors(const Lin& op, int n, const std::vector<int>& pos) {
  Lin r{n, n, std::vector<std::uint32_t>(std::size_t{1} << n, 0)};
  std::uint32_t pmask = 0;
  for (int p : pos) pmask |= 1u << p;
  for (std::uint32_t w = 0; w < r.col.size(); ++w) {
    std::uint32_t sub = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) sub |= ((w >> pos[i]) & 1u) << i;
    for (std::uint32_t s = op.col[sub]; s; s &= s - 1) {
      std::uint32_t u = std::countr_zero(s), out = w & ~pmask;
      for (std::size_t i = 0; i < pos.size(); ++i) out |= ((u >> i) & 1u) << pos[i];
      r.col[w] ^= std::uint32_t{1} << out;
    }
  }
  return r;
}

int deg(int label) { return 1 - 2 * label; }

char label_char(int l) { return l ? '-' : '+'; }
int parse_label(char c) {
  if (c == '+') return 0;
  if (c == '-') return 1;
  throw RuleError(std::string("bad label '") + c + "'");
}

}  // namespace

// ---- rules ----

FrobeniusRule FrobeniusRule::khovanov() {
  FrobeniusRule r;
  r.name = "khovanov";
  r.m[0] = 0b01;  // ++ -> +
  r.m[1] = 0b10;  // +- -> -
  r.m[2] = 0b10;  // -+ -> -
  r.m[3] = 0;     // -- -> 0
  r.delta[0] = 0b0110;  // + -> +- + -+
  r.delta[1] = 0b1000;  // - -> --
  return r;
}

FrobeniusRule FrobeniusRule::bar_natan() {
  FrobeniusRule r = khovanov();
  r.name = "bar-natan";
  r.m[3] = 0b10;        // -- -> -
  r.delta[0] = 0b0111;  // + -> +- + -+ + ++
  return r;
}

Lin FrobeniusRule::m_lin() const { return Lin{2, 1, {m[0], m[2], m[1], m[3]}}; }
// word w = a | b << 1, so w = 1 is (-,+) = m[2].

Lin FrobeniusRule::delta_lin() const {
  Lin l{1, 2, {0, 0}};
  for (int a = 0; a < 2; ++a)
    for (int p = 0; p < 4; ++p)
      if ((delta[a] >> p) & 1) {
        int x = p >> 1, y = p & 1;
        l.col[a] ^= 1u << (x | (y << 1));
      }
  return l;
}

Lin FrobeniusRule::unit_lin() const { return Lin{0, 1, {unit}}; }
Lin FrobeniusRule::counit_lin() const {
  return Lin{1, 0, {static_cast<std::uint32_t>(counit[0] & 1), static_cast<std::uint32_t>(counit[1] & 1)}};
}

std::vector<std::string> FrobeniusRule::check_axioms() const {
  std::vector<std::string> bad;
  const Lin M = m_lin(), D = delta_lin(), U = unit_lin(), E = counit_lin(), I = Lin::identity(1);
  if (M * tensor(M, I) != M * tensor(I, M)) bad.push_back("associativity");
  if (tensor(D, I) * D != tensor(I, D) * D) bad.push_back("coassociativity");
  if (M * swap2() != M) bad.push_back("commutativity");
  if (swap2() * D != D) bad.push_back("cocommutativity");
  if (M * tensor(U, I) != I || M * tensor(I, U) != I) bad.push_back("unit");
  if (tensor(E, I) * D != I || tensor(I, E) * D != I) bad.push_back("counit");
  if (D * M != tensor(M, I) * tensor(I, D) || D * M != tensor(I, M) * tensor(D, I))
    bad.push_back("frobenius");
  if (unit != 0b01) bad.push_back("unit is not v+");
  if (counit[0] != 0 || counit[1] != 1) bad.push_back("counit is not dual to v-");
  bool filtered = true;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int l = 0; l < 2; ++l)
        if (((m[2 * a + b] >> l) & 1) && deg(l) < deg(a) + deg(b) - 1) filtered = false;
  for (int a = 0; a < 2; ++a)
    for (int p = 0; p < 4; ++p)
      if (((delta[a] >> p) & 1) && deg(p >> 1) + deg(p & 1) < deg(a) - 1) filtered = false;
  if (!filtered) bad.push_back("filtration");
  return bad;
}

FrobeniusRule FrobeniusRule::from_json(const nlohmann::json& j) {
  FrobeniusRule r;
  try {
    r.name = j.value("name", std::string("custom"));
    for (auto& [k, v] : j.at("m").items()) {
      if (k.size() != 2) throw RuleError("m key must be two labels: " + k);
      int idx = 2 * parse_label(k[0]) + parse_label(k[1]);
      for (auto& o : v) r.m[idx] ^= 1 << parse_label(o.get<std::string>().at(0));
    }
    for (auto& [k, v] : j.at("delta").items()) {
      if (k.size() != 1) throw RuleError("delta key must be one label: " + k);
      int a = parse_label(k[0]);
      for (auto& o : v) {
        auto s = o.get<std::string>();
        if (s.size() != 2) throw RuleError("delta output must be two labels: " + s);
        r.delta[a] ^= 1 << (2 * parse_label(s[0]) + parse_label(s[1]));
      }
    }
    if (j.contains("unit")) {
      r.unit = 0;
      for (auto& o : j["unit"]) r.unit ^= 1 << parse_label(o.get<std::string>().at(0));
    }
    if (j.contains("counit")) {
      r.counit[0] = j["counit"].value("+", 0) & 1;
      r.counit[1] = j["counit"].value("-", 0) & 1;
    }
  } catch (const nlohmann::json::exception& e) {
    throw RuleError(std::string("malformed rule: ") + e.what());
  } catch (const std::out_of_range&) {
    throw RuleError("malformed rule: empty label");
  }
  auto bad = r.check_axioms();
  if (!bad.empty()) {
    std::string msg = "rule '" + r.name + "' violates:";
    for (auto& b : bad) msg += " " + b;
    throw RuleError(msg);
  }
  return r;
}

nlohmann::json FrobeniusRule::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["kind"] = "frobenius";
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      auto arr = nlohmann::json::array();
      for (int l = 0; l < 2; ++l)
        if ((m[2 * a + b] >> l) & 1) arr.push_back(std::string(1, label_char(l)));
      j["m"][std::string{label_char(a), label_char(b)}] = arr;
    }
  for (int a = 0; a < 2; ++a) {
    auto arr = nlohmann::json::array();
    for (int p = 0; p < 4; ++p)
      if ((delta[a] >> p) & 1) arr.push_back(std::string{label_char(p >> 1), label_char(p & 1)});
    j["delta"][std::string(1, label_char(a))] = arr;
  }
  auto u = nlohmann::json::array();
  for (int l = 0; l < 2; ++l)
    if ((unit >> l) & 1) u.push_back(std::string(1, label_char(l)));
  j["unit"] = u;
  j["counit"] = {{"+", counit[0]}, {"-", counit[1]}};
  return j;
}

// ---- cube ----

std::uint64_t default_generator_cap() {
  if (const char* s = std::getenv("KHCOB_GENERATOR_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 26;
}

std::string generator_tag(dg::Resolution r, int crossings, std::uint64_t labels, int circles) {
  std::string t;
  t.reserve(crossings + circles + 1);
  for (int c = 0; c < crossings; ++c) t.push_back((r >> c) & 1 ? '1' : '0');
  t.push_back('|');
  for (int c = 0; c < circles; ++c) t.push_back(label_char((labels >> c) & 1));
  return t;
}

int quantum_degree(const dg::LinkDiagram& d, dg::Resolution r, std::uint64_t labels,
                   int circles) {
  int minus = std::popcount(labels);
  return (circles - 2 * minus) + std::popcount(r) + d.n_plus() - 2 * d.n_minus();
}

std::vector<std::uint64_t> apply_saddle(const FrobeniusRule& rule, const dg::EdgeAction& e,
                                        std::uint64_t labels) {
  std::uint64_t base = 0;
  for (std::size_t i = 0; i < e.passive.size(); ++i)
    if (e.passive[i] >= 0 && ((labels >> i) & 1)) base |= std::uint64_t{1} << e.passive[i];
  std::vector<std::uint64_t> out;
  if (e.merge) {
    int a = (labels >> e.from[0]) & 1, b = (labels >> e.from[1]) & 1;
    for (int l = 0; l < 2; ++l)
      if ((rule.m[2 * a + b] >> l) & 1) out.push_back(base | (std::uint64_t(l) << e.to[0]));
  } else {
    int a = (labels >> e.from[0]) & 1;
    for (int p = 0; p < 4; ++p)
      if ((rule.delta[a] >> p) & 1)
        out.push_back(base | (std::uint64_t(p >> 1) << e.to[0]) |
                      (std::uint64_t(p & 1) << e.to[1]));
  }
  return out;
}

namespace {

void check_size(const dg::LinkDiagram& d) {
  if (d.crossing_count() > 40) throw CapExceeded("too many crossings for the cube");
}

void check_cap(std::uint64_t total, std::uint64_t cap) {
  if (total > cap)
    throw CapExceeded("cube has " + std::to_string(total) + " generators, cap is " +
                      std::to_string(cap));
}

}  // namespace

CubePtr build_cube(const dg::LinkDiagram& d, const FrobeniusRule& rule, std::uint64_t cap) {
  check_size(d);
  auto cube = std::make_shared<Cube>();
  cube->diagram = d;
  cube->rule = rule;
  const int k = static_cast<int>(d.crossing_count());
  const std::uint64_t nv = std::uint64_t{1} << k;
  cube->vertices.reserve(nv);
  cube->offset.assign(nv + 1, 0);
  for (std::uint64_t r = 0; r < nv; ++r) {
    cube->vertices.push_back(dg::resolve(d, r));
    int cc = cube->vertices.back().circle_count;
    if (cc >= 40) throw CapExceeded("too many circles");
    cube->offset[r + 1] = cube->offset[r] + (std::uint64_t{1} << cc);
    check_cap(cube->offset[r + 1], cap);
  }
  const std::uint64_t n = cube->offset[nv];
  const int hshift = -d.n_minus();
  std::vector<chain::Generator> gens;
  gens.reserve(n);
  for (std::uint64_t r = 0; r < nv; ++r) {
    int cc = cube->vertices[r].circle_count;
    int h = std::popcount(r) + hshift;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << cc); ++x)
      gens.push_back({h, quantum_degree(d, r, x, cc), generator_tag(r, k, x, cc)});
  }
  chain::SparseMap dm(n, n);
  for (std::uint64_t r = 0; r < nv; ++r) {
    const auto& ri = cube->vertices[r];
    std::vector<std::pair<std::uint64_t, dg::EdgeAction>> edges;
    for (int c = 0; c < k; ++c)
      if (!((r >> c) & 1)) {
        std::uint64_t s = r | (std::uint64_t{1} << c);
        edges.emplace_back(s, dg::edge_action(d, c, ri, cube->vertices[s]));
      }
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << ri.circle_count); ++x) {
      chain::SparseVec col;
      for (auto& [s, e] : edges)
        for (auto y : apply_saddle(rule, e, x)) col.push_back(cube->index(s, y));
      if (!col.empty()) dm.set_column(cube->index(r, x), std::move(col));
    }
  }
  cube->complex = chain::share(chain::FilteredComplex(std::move(gens), std::move(dm)));
  return cube;
}

chain::FilteredComplex cube_complex(const dg::LinkDiagram& d, const FrobeniusRule& rule) {
  return *build_cube(d, rule)->complex;
}

// ---- handle maps ----

chain::FilteredChainMap handle_map(const Cube& src, const Cube& dst, const dg::MoveResult& mv) {
  const auto& rule = src.rule;
  Lin local;
  int qdeg = 0;
  if (std::holds_alternative<dg::Handle0>(mv.move)) {
    local = rule.unit_lin();
    qdeg = 1;
  } else if (std::holds_alternative<dg::Handle2>(mv.move)) {
    local = rule.counit_lin();
    qdeg = 1;
  } else if (std::holds_alternative<dg::Handle1>(mv.move)) {
    qdeg = -1;
  } else if (std::holds_alternative<dg::Relabel>(mv.move)) {
    local = Lin::identity(0);
  } else {
    throw dg::DiagramError(dg::DiagramError::Kind::InvalidSite,
                           "handle_map: not a handle or relabeling move");
  }
  const auto &D = src.diagram, &E = dst.diagram;
  const int k = static_cast<int>(D.crossing_count());
  if (E.crossing_count() != D.crossing_count())
    throw dg::DiagramError(dg::DiagramError::Kind::InvalidSite, "handle_map: crossings changed");
  const std::size_t nsrc = src.complex->size(), ndst = dst.complex->size();
  chain::SparseMap mat(ndst, nsrc);
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << k); ++r) {
    std::uint64_t s = 0;
    for (int c = 0; c < k; ++c)
      if ((r >> c) & 1) s |= std::uint64_t{1} << mv.crossing_image[c];
    const auto &R = src.vertices[r], &S = dst.vertices[s];
    std::set<int> ain, aout;
    for (auto a : mv.site_before) ain.insert(R.circle_of_arc[D.arc_index(a)]);
    for (auto a : mv.site_after) aout.insert(S.circle_of_arc[E.arc_index(a)]);
    std::vector<int> in(ain.begin(), ain.end()), out(aout.begin(), aout.end());
    std::vector<int> passive(R.circle_count, -1);
    for (int i = 0; i < R.circle_count; ++i) {
      if (ain.count(i)) continue;
      dg::ArcId img = mv.arc_image[D.arc_index(R.circles[i][0])];
      if (!img) throw chain::ChainError("handle_map: passive arc has no image");
      passive[i] = S.circle_of_arc[E.arc_index(img)];
      if (aout.count(passive[i])) throw chain::ChainError("handle_map: passive circle is active");
    }
    Lin op = local;
    if (std::holds_alternative<dg::Handle1>(mv.move)) {
      if (in.size() == 2 && out.size() == 1) op = rule.m_lin();
      else if (in.size() == 1 && out.size() == 2) op = rule.delta_lin();
      else throw dg::DiagramError(dg::DiagramError::Kind::InvalidSite,
                                  "handle_map: 1-handle is neither a merge nor a split");
    }
    if (static_cast<int>(in.size()) != op.n_in || static_cast<int>(out.size()) != op.n_out)
      throw chain::ChainError("handle_map: unexpected active circles");
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << R.circle_count); ++x) {
      std::uint64_t base = 0;
      std::uint32_t w = 0;
      for (int i = 0; i < R.circle_count; ++i)
        if ((x >> i) & 1) {
          if (passive[i] >= 0) base |= std::uint64_t{1} << passive[i];
        }
      for (std::size_t t = 0; t < in.size(); ++t) w |= ((x >> in[t]) & 1) << t;
      chain::SparseVec col;
      for (std::uint32_t sset = op.col[w]; sset; sset &= sset - 1) {
        std::uint32_t u = std::countr_zero(sset);
        std::uint64_t y = base;
        for (std::size_t t = 0; t < out.size(); ++t) y |= std::uint64_t((u >> t) & 1) << out[t];
        col.push_back(dst.index(s, y));
      }
      if (!col.empty()) mat.set_column(src.index(r, x), std::move(col));
    }
  }
  chain::FilteredChainMap f{src.complex, dst.complex, std::move(mat), 0, qdeg};
  auto rep = chain::verify_map(f, true);
  if (!rep.ok()) throw chain::ChainError("handle_map: " + rep.summary());
  return f;
}

chain::FilteredChainMap handle_map(const dg::LinkDiagram& d, const dg::Move& m,
                                   const FrobeniusRule& rule) {
  auto mv = dg::apply_move(d, m);
  return handle_map(*build_cube(mv.before, rule), *build_cube(mv.after, rule), mv);
}

// ---- iterated cones ----

namespace {

struct ConeBuilder {
  const dg::LinkDiagram& d;
  const FrobeniusRule& rule;
  int k;
  std::vector<dg::ResolvedDiagram> res;

  // Crossings below j free, the others fixed by `high`.
  chain::FilteredComplex build(int j, std::uint64_t high) {
    if (j == 0) {
      int cc = res[high].circle_count;
      std::vector<chain::Generator> gens;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << cc); ++x)
        gens.push_back({std::popcount(high) - d.n_minus(), quantum_degree(d, high, x, cc),
                        generator_tag(high, k, x, cc)});
      std::size_t n = gens.size();
      return chain::FilteredComplex(std::move(gens), chain::SparseMap(n, n));
    }
    const std::uint64_t bit = std::uint64_t{1} << (j - 1);
    auto c0 = chain::share(build(j - 1, high));
    auto c1 = chain::share(build(j - 1, high | bit));
    chain::SparseMap f(c1->size(), c0->size());
    std::uint64_t off0 = 0, off1 = 0;
    for (std::uint64_t low = 0; low < bit; ++low) {
      std::uint64_t r0 = high | low, r1 = r0 | bit;
      auto e = dg::edge_action(d, r0, r1);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << res[r0].circle_count); ++x) {
        chain::SparseVec col;
        for (auto y : apply_saddle(rule, e, x)) col.push_back(static_cast<Index>(off1 + y));
        if (!col.empty()) f.set_column(off0 + x, std::move(col));
      }
      off0 += std::uint64_t{1} << res[r0].circle_count;
      off1 += std::uint64_t{1} << res[r1].circle_count;
    }
    return chain::cone({c0, c1, std::move(f), 1, 0});
  }
};

}  // namespace

chain::FilteredComplex iterated_cone(const dg::LinkDiagram& d, const FrobeniusRule& rule) {
  check_size(d);
  const int k = static_cast<int>(d.crossing_count());
  ConeBuilder b{d, rule, k, {}};
  std::uint64_t total = 0;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << k); ++r) {
    b.res.push_back(dg::resolve(d, r));
    total += std::uint64_t{1} << b.res.back().circle_count;
  }
  check_cap(total, default_generator_cap());
  return b.build(k, 0);
}

// ---- closed surfaces and 4Tu ----

std::vector<chain::Index> union_correspondence(const Cube& a, const Cube& b, const Cube& ab) {
  const int ka = static_cast<int>(a.diagram.crossing_count());
  const std::size_t na = a.complex->size(), nb = b.complex->size();
  // Arcs of b are shifted past those of a, so a's circles are numbered first.
  std::vector<std::pair<dg::Resolution, std::uint64_t>> ga(na), gb(nb);
  for (dg::Resolution r = 0; r + 1 < a.offset.size(); ++r)
    for (auto i = a.offset[r]; i < a.offset[r + 1]; ++i) ga[i] = {r, i - a.offset[r]};
  for (dg::Resolution r = 0; r + 1 < b.offset.size(); ++r)
    for (auto i = b.offset[r]; i < b.offset[r + 1]; ++i) gb[i] = {r, i - b.offset[r]};
  std::vector<chain::Index> out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      auto [ra, la] = ga[i];
      auto [rb, lb] = gb[j];
      const int ca = a.vertices[ra].circle_count;
      out[i * nb + j] = ab.index(ra | (rb << ka), la | (lb << ca));
    }
  return out;
}

int evaluate_closed(const FrobeniusRule& rule, int genus) {
  Lin x = rule.unit_lin();
  const Lin handle = rule.m_lin() * rule.delta_lin();
  for (int g = 0; g < genus; ++g) x = handle * x;
  return static_cast<int>((rule.counit_lin() * x).col[0] & 1);
}

bool check_4tu(const FrobeniusRule& rule) {
  const Lin handle = rule.m_lin() * rule.delta_lin();
  const Lin tube = rule.delta_lin() * rule.m_lin();
  for (int n = 1; n <= 4; ++n) {
    int total = 1;
    for (int i = 0; i < 4; ++i) total *= n;
    for (int code = 0; code < total; ++code) {
      std::array<int, 4> c{};
      int t = code;
      std::set<int> used;
      for (int i = 0; i < 4; ++i) {
        c[i] = t % n;
        t /= n;
        used.insert(c[i]);
      }
      if (static_cast<int>(used.size()) != n) continue;
      auto sigma = [&](int i, int j) {
        if (c[i] == c[j]) return on_factors(handle, n, {c[i]});
        return on_factors(tube, n, {c[i], c[j]});
      };
      if (sigma(0, 1) + sigma(2, 3) != sigma(0, 2) + sigma(1, 3)) return false;
    }
  }
  return true;
}

}  // namespace khcob::tqft
