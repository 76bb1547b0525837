#include <doctest.h>

#include <random>

#include "khcob/chaincx.hpp"
#include "khcob/tqft.hpp"

using namespace khcob::chain;
using khcob::f2::SparseMap;

namespace {

FilteredComplex make(std::vector<Generator> g, std::vector<std::pair<Index, Index>> src_tgt) {
  std::vector<std::pair<Index, Index>> rc;
  for (auto [s, t] : src_tgt) rc.push_back({t, s});
  auto n = g.size();
  return FilteredComplex(std::move(g), SparseMap::from_entries(n, n, rc));
}

// a -> b, both at q = 0, plus an isolated c
FilteredComplex small() { return make({{0, 0, "a"}, {1, 0, "b"}, {1, 2, "c"}}, {{0, 1}}); }

bool has_issue(const VerifyReport& r, const std::string& kind) {
  for (auto& i : r.issues)
    if (i.kind == kind) return true;
  return false;
}

}  // namespace

TEST_SUITE("chaincx") {
  TEST_CASE("verify accepts complexes and catches planted faults") {
    CHECK(verify(small()).ok());
    // planted d^2 != 0: a -> b -> c
    auto bad = make({{0, 0, "a"}, {1, 0, "b"}, {2, 0, "c"}}, {{0, 1}, {1, 2}});
    auto r = verify(bad);
    CHECK_FALSE(r.ok());
    CHECK(has_issue(r, "d_squared"));
    CHECK(has_issue(verify(make({{0, 2}, {1, 0}}, {{0, 1}})), "filtration"));
    CHECK(has_issue(verify(make({{0, 0}, {2, 0}}, {{0, 1}})), "h_degree"));
  }

  TEST_CASE("homology of small complexes") {
    auto h = homology(small());
    CHECK(h.graded);
    CHECK(h.total == 1);
    CHECK(h.dims.at({1, 2}) == 1);
    auto f = make({{0, 0}, {1, 2}}, {{0, 1}});
    auto hf = homology(f);
    CHECK_FALSE(hf.graded);
    CHECK(hf.total == 0);
  }

  TEST_CASE("cone of the identity is acyclic, cone of zero is a sum") {
    auto c = share(small());
    auto ci = cone(identity_map(c));
    CHECK(verify(ci).ok());
    CHECK(homology(ci).total == 0);
    auto cz = cone(zero_map(c, c));
    CHECK(homology(cz).total == 2);
  }

  TEST_CASE("tensor and equal_under") {
    auto a = small();
    auto t = tensor(a, a);
    CHECK(t.size() == 9);
    CHECK(verify(t).ok());
    CHECK(homology(t).total == 1);
    std::vector<Index> id{0, 1, 2};
    CHECK(equal_under(a, a, id));
    auto b = make({{1, 2, "c"}, {0, 0, "a"}, {1, 0, "b"}}, {{1, 2}});
    CHECK(equal_under(a, b, {2, 0, 1}));
    CHECK_FALSE(equal_under(a, b, {0, 1, 2}));
  }

  TEST_CASE("reduction data satisfies its identities") {
    auto trefoil = khcob::diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    for (auto rule : {khcob::tqft::FrobeniusRule::khovanov(), khcob::tqft::FrobeniusRule::bar_natan()}) {
      auto c = share(khcob::tqft::cube_complex(trefoil, rule));
      auto r = reduce(c, true);
      auto n = r.reduced->size();
      CHECK((r.pi.matrix * r.iota.matrix) == SparseMap::identity(n));
      auto lhs = r.iota.matrix * r.pi.matrix + SparseMap::identity(c->size());
      auto rhs = c->d() * r.homotopy + r.homotopy * c->d();
      CHECK(lhs == rhs);
      CHECK(verify_map(r.pi).ok());
      CHECK(verify_map(r.iota).ok());
      CHECK(homology(*r.reduced).total == homology(*c).total);
    }
  }

  TEST_CASE("spectral pages") {
    auto f = make({{0, 0}, {1, 2}, {0, 4}}, {{0, 1}});
    auto s = spectral_pages(f);
    CHECK(s.pages.front().total == 3);
    CHECK(s.stable.total == 1);
    CHECK(s.stabilized_at == 2);  // d jumps q by 2 = one unit: dies on E1 -> E2
  }

  TEST_CASE("homotopy solver") {
    auto c = share(small());
    auto id = identity_map(c);
    auto z = zero_map(c, c);
    CHECK_FALSE(homotopic(id, z));
    CHECK(homotopic(id, id));

    auto ac = share(make({{0, 0}, {1, 0}}, {{0, 1}}));
    auto h = homotopic(identity_map(ac), zero_map(ac, ac));
    REQUIRE(h);
    CHECK(is_homotopy(identity_map(ac), zero_map(ac, ac), *h));
    // not filtered-homotopic when the only contraction lowers q
    auto fc = share(make({{0, 0}, {1, 2}}, {{0, 1}}));
    CHECK_FALSE(homotopic(identity_map(fc), zero_map(fc, fc)));
    CHECK(homotopic(identity_map(fc), zero_map(fc, fc), {false, HomotopyOptions::Method::automatic}));
  }

  TEST_CASE("homology rank of maps") {
    auto c = share(small());
    CHECK(homology_rank(identity_map(c)) == 1);
    CHECK(homology_rank(zero_map(c, c)) == 0);
    CHECK(homology_rank(add(identity_map(c), identity_map(c))) == 0);
    CHECK(compose(identity_map(c), identity_map(c)).matrix == SparseMap::identity(3));
  }
}
