#include "khcob/chaincx.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace khcob::chain {

FilteredComplex::FilteredComplex(std::vector<Generator> gens, SparseMap d)
    : gens_(std::move(gens)), d_(std::move(d)) {
  if (d_.rows() != gens_.size() || d_.cols() != gens_.size())
    throw ChainError("differential shape does not match generator count");
}

bool FilteredComplex::q_preserving() const {
  for (std::size_t j = 0; j < size(); ++j)
    for (auto i : d_.column(j))
      if (gens_[i].q != gens_[j].q) return false;
  return true;
}

ComplexPtr share(FilteredComplex c) { return std::make_shared<const FilteredComplex>(std::move(c)); }

FilteredChainMap identity_map(const ComplexPtr& c) {
  return {c, c, SparseMap::identity(c->size()), 0};
}

FilteredChainMap zero_map(const ComplexPtr& s, const ComplexPtr& t, int h_degree, int q_degree) {
  return {s, t, SparseMap(t->size(), s->size()), h_degree, q_degree};
}

FilteredChainMap compose(const FilteredChainMap& g, const FilteredChainMap& f) {
  if (f.target->size() != g.source->size()) throw ChainError("compose: complexes do not match");
  return {f.source, g.target, g.matrix * f.matrix, f.h_degree + g.h_degree,
          f.q_degree + g.q_degree};
}

FilteredChainMap add(const FilteredChainMap& f, const FilteredChainMap& g) {
  if (f.source->size() != g.source->size() || f.target->size() != g.target->size())
    throw ChainError("add: complexes do not match");
  return {f.source, f.target, f.matrix + g.matrix, f.h_degree, std::min(f.q_degree, g.q_degree)};
}

std::string VerifyReport::summary(std::size_t max_items) const {
  if (issues.empty()) return "ok";
  std::ostringstream os;
  os << issues.size() << " issue(s)";
  for (std::size_t i = 0; i < issues.size() && i < max_items; ++i)
    os << "; " << issues[i].kind << " " << issues[i].source << "->" << issues[i].target << ": "
       << issues[i].message;
  return os.str();
}

VerifyReport verify(const FilteredComplex& c) {
  VerifyReport rep;
  const auto& d = c.d();
  for (std::size_t j = 0; j < c.size(); ++j)
    for (auto i : d.column(j)) {
      const auto &s = c.gen(j), &t = c.gen(i);
      if (t.h != s.h + 1)
        rep.issues.push_back({"h_degree", static_cast<Index>(j), i,
                              "h " + std::to_string(s.h) + " -> " + std::to_string(t.h)});
      if (t.q < s.q)
        rep.issues.push_back({"filtration", static_cast<Index>(j), i,
                              "q " + std::to_string(s.q) + " -> " + std::to_string(t.q)});
    }
  auto dd = d * d;
  for (auto [r, col] : dd.entries())
    rep.issues.push_back({"d_squared", col, r, "d^2 has a nonzero entry"});
  return rep;
}

VerifyReport verify_map(const FilteredChainMap& f, bool require_chain_map) {
  VerifyReport rep;
  const auto &s = *f.source, &t = *f.target;
  if (f.matrix.rows() != t.size() || f.matrix.cols() != s.size()) {
    rep.issues.push_back({"shape", 0, 0, "matrix shape does not match the complexes"});
    return rep;
  }
  for (std::size_t j = 0; j < s.size(); ++j)
    for (auto i : f.matrix.column(j)) {
      if (t.gen(i).h != s.gen(j).h + f.h_degree)
        rep.issues.push_back({"h_degree", static_cast<Index>(j), i, "wrong homological degree"});
      if (t.gen(i).q < s.gen(j).q + f.q_degree)
        rep.issues.push_back({"filtration", static_cast<Index>(j), i, "map lowers q below its degree"});
    }
  if (require_chain_map) {
    auto diff = f.matrix * s.d() + t.d() * f.matrix;
    for (auto [r, col] : diff.entries())
      rep.issues.push_back({"chain_map", col, r, "f d != d' f"});
  }
  return rep;
}

FilteredComplex cone(const FilteredChainMap& f) {
  auto rep = verify_map(f, true);
  for (auto& is : rep.issues)
    if (is.kind == "chain_map" || is.kind == "shape") throw ChainError("cone: not a chain map");
  if (f.q_degree < 0) throw ChainError("cone: map must not lower the filtration");
  const auto &s = *f.source, &t = *f.target;
  const std::size_t ns = s.size(), nt = t.size();
  std::vector<Generator> gens;
  gens.reserve(ns + nt);
  for (auto g : s.gens()) {
    g.h += f.h_degree - 1;
    gens.push_back(std::move(g));
  }
  for (const auto& g : t.gens()) gens.push_back(g);
  SparseMap d(ns + nt, ns + nt);
  for (std::size_t j = 0; j < ns; ++j) {
    SparseVec col = s.d().column(j);
    for (auto i : f.matrix.column(j)) col.push_back(static_cast<Index>(ns + i));
    d.set_column(j, std::move(col));
  }
  for (std::size_t j = 0; j < nt; ++j) {
    SparseVec col;
    for (auto i : t.d().column(j)) col.push_back(static_cast<Index>(ns + i));
    d.set_column(ns + j, std::move(col));
  }
  return FilteredComplex(std::move(gens), std::move(d));
}

FilteredComplex tensor(const FilteredComplex& a, const FilteredComplex& b) {
  const std::size_t na = a.size(), nb = b.size();
  std::vector<Generator> gens;
  gens.reserve(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      gens.push_back({a.gen(i).h + b.gen(j).h, a.gen(i).q + b.gen(j).q,
                      "(" + a.gen(i).tag + "," + b.gen(j).tag + ")"});
  SparseMap d(na * nb, na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      SparseVec col;
      for (auto r : a.d().column(i)) col.push_back(static_cast<Index>(r * nb + j));
      for (auto r : b.d().column(j)) col.push_back(static_cast<Index>(i * nb + r));
      d.set_column(i * nb + j, std::move(col));
    }
  return FilteredComplex(std::move(gens), std::move(d));
}

bool equal_under(const FilteredComplex& x, const FilteredComplex& y,
                 const std::vector<Index>& y_to_x) {
  if (x.size() != y.size() || y_to_x.size() != y.size()) return false;
  std::vector<char> hit(x.size(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    Index j = y_to_x[i];
    if (j >= x.size() || hit[j]) return false;
    hit[j] = 1;
    if (x.gen(j).h != y.gen(i).h || x.gen(j).q != y.gen(i).q) return false;
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    SparseVec col;
    for (auto r : y.d().column(i)) col.push_back(y_to_x[r]);
    std::sort(col.begin(), col.end());
    if (col != x.d().column(y_to_x[i])) return false;
  }
  return true;
}

// ---- elimination ----

Eliminator::Eliminator(const FilteredComplex& c, bool track) : c_(&c), track_(track) {
  const std::size_t n = c.size();
  out_.resize(n);
  in_.resize(n);
  alive_.assign(n, 1);
  alive_count_ = n;
  for (std::size_t j = 0; j < n; ++j)
    for (auto i : c.d().column(j)) {
      out_[j].push_back(i);
      in_[i].push_back(static_cast<Index>(j));
    }
  if (track_) {
    iota_.resize(n);
    pirow_.resize(n);
    h_.resize(n);
    for (std::size_t i = 0; i < n; ++i) iota_[i] = pirow_[i] = {static_cast<Index>(i)};
  }
}

void Eliminator::erase_from(std::vector<Index>& v, Index x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) throw ChainError("eliminator: adjacency out of sync");
  *it = v.back();
  v.pop_back();
}

void Eliminator::toggle(Index x, Index y) {
  auto& o = out_[x];
  auto it = std::find(o.begin(), o.end(), y);
  if (it != o.end()) {
    *it = o.back();
    o.pop_back();
    erase_from(in_[y], x);
  } else {
    o.push_back(y);
    in_[y].push_back(x);
  }
}

bool Eliminator::has_entry(Index a, Index b) const {
  return std::find(out_[a].begin(), out_[a].end(), b) != out_[a].end();
}

void Eliminator::cancel(Index a, Index b) {
  if (!alive_[a] || !alive_[b] || !has_entry(a, b))
    throw ChainError("cancel: no differential entry " + std::to_string(a) + " -> " +
                     std::to_string(b));
  if (c_->gen(a).q != c_->gen(b).q) throw ChainError("cancel: entry changes q");
  std::vector<Index> A, Bs;
  for (auto y : out_[a])
    if (y != b) A.push_back(y);
  for (auto x : in_[b])
    if (x != a) Bs.push_back(x);
  for (auto x : Bs)
    for (auto y : A) toggle(x, y);
  if (track_) {
    for (auto x : Bs) f2::xor_into(iota_[x], iota_[a]);
    for (auto g : pirow_[b]) f2::xor_into(h_[g], iota_[a]);
    for (auto y : A) f2::xor_into(pirow_[y], pirow_[b]);
  }
  for (Index v : {a, b}) {
    for (auto x : in_[v]) erase_from(out_[x], v);
    in_[v].clear();
    for (auto y : out_[v]) erase_from(in_[y], v);
    out_[v].clear();
    alive_[v] = 0;
    if (track_) {
      SparseVec().swap(iota_[v]);
      SparseVec().swap(pirow_[v]);
    }
  }
  alive_count_ -= 2;
}

void Eliminator::cancel_all() {
  const std::size_t n = c_->size();
  std::vector<Index> work;
  std::vector<char> queued(n, 1);
  work.reserve(n);
  for (std::size_t i = n; i-- > 0;) work.push_back(static_cast<Index>(i));
  while (!work.empty()) {
    Index a = work.back();
    work.pop_back();
    queued[a] = 0;
    if (!alive_[a]) continue;
    const int qa = c_->gen(a).q;
    Index best = 0;
    std::size_t best_in = SIZE_MAX;
    for (auto y : out_[a])
      if (c_->gen(y).q == qa && (in_[y].size() < best_in ||
                                 (in_[y].size() == best_in && y < best))) {
        best = y;
        best_in = in_[y].size();
      }
    if (best_in == SIZE_MAX) continue;
    // Sources of the pivot's target gain new entries; revisit them.
    for (auto x : in_[best])
      if (x != a && !queued[x]) {
        queued[x] = 1;
        work.push_back(x);
      }
    cancel(a, best);
  }
}

FilteredComplex Eliminator::finish_untracked() const {
  const std::size_t n = c_->size();
  std::vector<Index> newid(n, 0);
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < n; ++i)
    if (alive_[i]) {
      newid[i] = static_cast<Index>(gens.size());
      gens.push_back(c_->gen(i));
    }
  SparseMap d(gens.size(), gens.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive_[i] || out_[i].empty()) continue;
    SparseVec col;
    for (auto y : out_[i]) col.push_back(newid[y]);
    d.set_column(newid[i], std::move(col));
  }
  return FilteredComplex(std::move(gens), std::move(d));
}

Reduction Eliminator::finish(const ComplexPtr& original, bool verify_result) const {
  if (!track_) throw ChainError("finish: eliminator was not tracking");
  if (original.get() != c_) throw ChainError("finish: wrong original complex");
  auto red = share(finish_untracked());
  const std::size_t n = c_->size(), m = red->size();
  SparseMap pi(m, n), iota(n, m), h(n, n);
  std::vector<std::pair<Index, Index>> pe;
  Index j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive_[i]) continue;
    iota.set_column(j, iota_[i]);
    for (auto g : pirow_[i]) pe.emplace_back(j, g);
    ++j;
  }
  pi = SparseMap::from_entries(m, n, pe);
  for (std::size_t g = 0; g < n; ++g)
    if (!h_[g].empty()) h.set_column(g, h_[g]);
  Reduction r{red, {original, red, std::move(pi), 0}, {red, original, std::move(iota), 0},
              std::move(h)};
  if (verify_result) {
    if (!(r.pi.matrix * r.iota.matrix == SparseMap::identity(m)))
      throw ChainError("reduce: pi iota != id");
    auto lhs = r.iota.matrix * r.pi.matrix + SparseMap::identity(n);
    auto rhs = c_->d() * r.homotopy + r.homotopy * c_->d();
    if (!(lhs == rhs)) throw ChainError("reduce: iota pi != 1 + dH + Hd");
    if (!verify_map(r.pi).ok() || !verify_map(r.iota).ok())
      throw ChainError("reduce: tracked maps are not filtered chain maps");
    if (!verify(*red).ok()) throw ChainError("reduce: reduced complex is invalid");
  }
  return r;
}

Reduction reduce(const ComplexPtr& c, bool verify_result) {
  Eliminator e(*c, true);
  e.cancel_all();
  return e.finish(c, verify_result);
}

FilteredComplex reduce_untracked(const FilteredComplex& c) {
  Eliminator e(c, false);
  e.cancel_all();
  return e.finish_untracked();
}

// ---- spectral pages ----

namespace {

class RankTable {
 public:
  explicit RankTable(const FilteredComplex& c) : c_(c) {
    for (std::size_t i = 0; i < c.size(); ++i) by_h_[c.gen(i).h].push_back(static_cast<Index>(i));
  }
  // Rank of d from degree-h sources with q >= a to targets with q < b.
  long long R(int h, int a, int b) {
    auto key = std::make_tuple(h, a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Index> src, tgt;
    if (auto it = by_h_.find(h); it != by_h_.end())
      for (auto i : it->second)
        if (c_.gen(i).q >= a) src.push_back(i);
    if (auto it = by_h_.find(h + 1); it != by_h_.end())
      for (auto i : it->second)
        if (c_.gen(i).q < b) tgt.push_back(i);
    long long r = 0;
    if (!src.empty() && !tgt.empty()) {
      std::unordered_map<Index, std::size_t> row;
      for (std::size_t k = 0; k < tgt.size(); ++k) row[tgt[k]] = k;
      f2::BitMatrix m(src.size(), tgt.size());  // transposed: rank is the same
      bool any = false;
      for (std::size_t k = 0; k < src.size(); ++k)
        for (auto t : c_.d().column(src[k]))
          if (auto it = row.find(t); it != row.end()) {
            m.set(k, it->second);
            any = true;
          }
      if (any) r = static_cast<long long>(f2::rank_inplace(m));
    }
    memo_[key] = r;
    return r;
  }
  long long F(int h, int p) {
    long long n = 0;
    if (auto it = by_h_.find(h); it != by_h_.end())
      for (auto i : it->second) n += c_.gen(i).q >= p;
    return n;
  }

 private:
  const FilteredComplex& c_;
  std::map<int, std::vector<Index>> by_h_;
  std::map<std::tuple<int, int, int>, long long> memo_;
};

std::map<std::pair<int, int>, long long> page_dims(const FilteredComplex& c, RankTable& rt,
                                                   int r) {
  std::set<std::pair<int, int>> cells;
  for (auto& g : c.gens()) cells.insert({g.h, g.q});
  std::map<std::pair<int, int>, long long> dims;
  for (auto [h, p] : cells) {
    long long e = rt.F(h, p) - rt.R(h, p, p + r) - rt.F(h, p + 1) + rt.R(h, p + 1, p + r) -
                  rt.R(h - 1, p - r + 1, p + 1) + rt.R(h - 1, p - r + 1, p);
    if (e < 0) throw ChainError("spectral_pages: negative dimension");
    if (e) dims[{h, p}] = e;
  }
  return dims;
}

long long total_of(const std::map<std::pair<int, int>, long long>& d) {
  long long t = 0;
  for (auto& [k, v] : d) t += v;
  return t;
}

}  // namespace

SpectralResult spectral_pages(const FilteredComplex& c, int r_max) {
  SpectralResult res;
  int g = 0;
  for (std::size_t j = 0; j < c.size(); ++j)
    for (auto i : c.d().column(j)) {
      int jump = c.gen(i).q - c.gen(j).q;
      if (jump > 0) g = std::gcd(g, jump);
    }
  res.unit = g ? g : 2;

  Page e0;
  e0.index = 0;
  e0.name = "E0";
  for (auto& gen : c.gens()) ++e0.dims[{gen.h, gen.q}];
  e0.total = static_cast<long long>(c.size());
  res.pages.push_back(e0);

  // Pages from 1 on are invariant under filtered homotopy equivalence.
  auto red = reduce_untracked(c);
  RankTable rt(red);
  int qmin = 0, qmax = 0;
  for (std::size_t i = 0; i < red.size(); ++i) {
    if (i == 0 || red.gen(i).q < qmin) qmin = red.gen(i).q;
    if (i == 0 || red.gen(i).q > qmax) qmax = red.gen(i).q;
  }
  const int span = qmax - qmin;
  // In q units page k is E_{unit*(k-1)+1}; beyond the span it is E_infinity.
  res.stable.dims = page_dims(red, rt, span + 1);
  res.stable.total = total_of(res.stable.dims);
  res.stable.name = "stable page";
  int last = 1;
  while (res.unit * (last - 1) + 1 <= span) ++last;
  last = std::max(1, std::min(last, r_max));
  for (int k = 1; k <= last; ++k) {
    Page p;
    p.index = k;
    p.name = k == 1 ? "Khovanov page" : "E" + std::to_string(k);
    p.dims = page_dims(red, rt, res.unit * (k - 1) + 1);
    p.total = total_of(p.dims);
    res.pages.push_back(std::move(p));
  }
  res.pages[0].d_rank = (res.pages[0].total - (res.pages.size() > 1 ? res.pages[1].total : 0)) / 2;
  for (std::size_t i = 1; i < res.pages.size(); ++i) {
    long long next = i + 1 < res.pages.size() ? res.pages[i + 1].total : res.stable.total;
    res.pages[i].d_rank = (res.pages[i].total - next) / 2;
  }
  res.stable.index = static_cast<int>(res.pages.size());
  res.stabilized_at = static_cast<int>(res.pages.size());
  for (int k = static_cast<int>(res.pages.size()) - 1; k >= 1; --k) {
    if (res.pages[k].dims != res.stable.dims) break;
    res.stabilized_at = k;
  }
  return res;
}

HomologyResult homology(const FilteredComplex& c) {
  HomologyResult hr;
  hr.graded = c.q_preserving();
  auto red = reduce_untracked(c);
  if (red.d().is_zero()) {
    for (auto& g : red.gens()) ++hr.dims[{g.h, g.q}];
  } else {
    auto sp = spectral_pages(red, 1);
    hr.dims = sp.stable.dims;
  }
  for (auto& [k, v] : hr.dims) {
    hr.by_h[k.first] += v;
    hr.total += v;
  }
  return hr;
}

// ---- homotopies ----

namespace {

// Solves phi = d'K + Kd directly. Unknowns K_{yx} with h(y) = h(x) - 1 (and
// q(y) >= q(x) when filtered), ordered by (source, target).
std::optional<SparseMap> solve_direct(const FilteredComplex& s, const FilteredComplex& t,
                                      const SparseMap& phi, bool filtered, int q_degree,
                                      std::size_t bit_budget) {
  std::map<int, std::vector<Index>> tgt_by_h;
  for (std::size_t y = 0; y < t.size(); ++y) tgt_by_h[t.gen(y).h].push_back(static_cast<Index>(y));
  std::vector<std::pair<Index, Index>> vars;  // (x, y)
  for (std::size_t x = 0; x < s.size(); ++x) {
    auto it = tgt_by_h.find(s.gen(x).h - 1);
    if (it == tgt_by_h.end()) continue;
    for (auto y : it->second)
      if (!filtered || t.gen(y).q >= s.gen(x).q + q_degree) vars.emplace_back(static_cast<Index>(x), y);
  }
  auto dT = s.d().transpose();
  std::map<std::pair<Index, Index>, std::size_t> row_of;  // (z, x) -> row
  auto row = [&](Index z, Index x) {
    auto [it, fresh] = row_of.emplace(std::make_pair(z, x), row_of.size());
    return it->second;
  };
  std::vector<std::vector<std::size_t>> cols(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) {
    auto [x, y] = vars[v];
    for (auto z : t.d().column(y)) cols[v].push_back(row(z, x));
    for (auto w : dT.column(x)) cols[v].push_back(row(y, w));
  }
  std::vector<std::size_t> rhs_rows;
  for (auto [z, x] : phi.entries()) rhs_rows.push_back(row(z, x));
  const std::size_t nr = row_of.size();
  if (nr * (vars.size() + 1) > bit_budget) return std::nullopt;
  f2::BitMatrix m(nr, vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v)
    for (auto r : cols[v]) m.flip(r, v);
  f2::BitVector b(nr);
  for (auto r : rhs_rows) b.flip(r);
  auto sol = f2::solve(m, b);
  if (!sol) return std::nullopt;
  std::vector<std::pair<Index, Index>> entries;
  for (std::size_t v = 0; v < vars.size(); ++v)
    if (sol->get(v)) entries.emplace_back(vars[v].second, vars[v].first);
  return SparseMap::from_entries(t.size(), s.size(), entries);
}

}  // namespace

bool is_homotopy(const FilteredChainMap& f, const FilteredChainMap& g, const SparseMap& h) {
  auto phi = f.matrix + g.matrix;
  return phi == f.target->d() * h + h * f.source->d();
}

std::optional<SparseMap> homotopic(const FilteredChainMap& f, const FilteredChainMap& g,
                                   const HomotopyOptions& opts) {
  if (f.source->size() != g.source->size() || f.target->size() != g.target->size() ||
      !(*f.source == *g.source) || !(*f.target == *g.target))
    throw ChainError("homotopic: maps have different source or target");
  const auto &s = *f.source, &t = *f.target;
  auto phi = f.matrix + g.matrix;
  if (phi.is_zero()) return SparseMap(t.size(), s.size());
  constexpr std::size_t kDirectBudget = std::size_t{1} << 27;

  auto check = [&](const SparseMap& h) -> std::optional<SparseMap> {
    if (!is_homotopy(f, g, h)) throw ChainError("homotopic: witness failed verification");
    if (opts.filtered)
      for (auto [r, c] : h.entries())
        if (t.gen(r).q < s.gen(c).q + f.q_degree) throw ChainError("homotopic: witness is not filtered");
    return h;
  };

  using M = HomotopyOptions::Method;
  if (opts.method == M::direct ||
      (opts.method == M::automatic && s.size() * t.size() <= 4096)) {
    auto h = solve_direct(s, t, phi, opts.filtered, f.q_degree, opts.method == M::direct ? SIZE_MAX : kDirectBudget);
    if (h) return check(*h);
    if (opts.method == M::direct) return std::nullopt;
    // Fall through: the direct system was unsolvable or too large.
  }

  // Reduce both sides, solve on the minimal complexes, lift:
  // H = phi H_s + H_t phi iota_s pi_s + iota_t K pi_s.
  auto rs = reduce(f.source, false);
  auto rt = reduce(f.target, false);
  auto phim = rt.pi.matrix * phi * rs.iota.matrix;
  auto k = solve_direct(*rs.reduced, *rt.reduced, phim, opts.filtered, f.q_degree, SIZE_MAX);
  if (!k) return std::nullopt;
  auto h = phi * rs.homotopy + rt.homotopy * phi * rs.iota.matrix * rs.pi.matrix +
           rt.iota.matrix * (*k) * rs.pi.matrix;
  return check(h);
}

long long homology_rank(const FilteredChainMap& f) {
  auto rs = reduce(f.source, false);
  auto rt = reduce(f.target, false);
  auto fm = rt.pi.matrix * f.matrix * rs.iota.matrix;
  const auto &s = *rs.reduced, &t = *rt.reduced;
  // rank of H(f) = rank[B' | f Z] - rank B'
  auto z = f2::kernel_basis(s.d().to_dense());
  auto dt = t.d().to_dense();
  auto bprime = f2::image_basis(dt);
  f2::BitMatrix m(bprime.size() + z.size(), t.size());
  for (std::size_t i = 0; i < bprime.size(); ++i)
    for (std::size_t r = 0; r < t.size(); ++r)
      if (bprime[i].get(r)) m.set(i, r);
  auto fd = fm.to_dense();
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto img = fd * z[i];
    for (std::size_t r = 0; r < t.size(); ++r)
      if (img.get(r)) m.set(bprime.size() + i, r);
  }
  return static_cast<long long>(f2::rank(m)) - static_cast<long long>(bprime.size());
}

}  // namespace khcob::chain
