#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "khcob/suites.hpp"
#include "khcob/tqft.hpp"
#include "oracle.hpp"

using namespace khcob;
using tqft::FrobeniusRule;

namespace {

using Dims = std::map<std::pair<int, int>, long long>;

Dims dims_of(const diagram::LinkDiagram& d) {
  auto h = chain::homology(tqft::cube_complex(d, FrobeniusRule::khovanov()));
  Dims out;
  for (auto [hq, n] : h.dims)
    if (n) out[hq] = n;
  return out;
}

oracle::PD pd_of(const diagram::LinkDiagram& d) {
  oracle::PD pd;
  for (auto& x : d.crossings()) pd.push_back(x.arcs);
  return pd;
}

std::vector<suites::NamedDiagram> corpus_diagrams() {
  return suites::load_corpus(KHCOB_TEST_CORPUS).diagrams;
}

}  // namespace

TEST_SUITE("tqft") {
  TEST_CASE("both rules satisfy the Frobenius axioms, S, T and 4Tu") {
    for (auto r : {FrobeniusRule::khovanov(), FrobeniusRule::bar_natan()}) {
      CAPTURE(r.name);
      CHECK(r.check_axioms().empty());
      CHECK(tqft::evaluate_closed(r, 0) == 0);
      CHECK(tqft::evaluate_closed(r, 1) == 0);
      CHECK(tqft::check_4tu(r));
      CHECK(FrobeniusRule::from_json(r.to_json()).to_json() == r.to_json());
    }
  }

  TEST_CASE("corrupted rules are caught") {
    auto r = FrobeniusRule::khovanov();
    r.delta[0] = 0b0010;  // v+ -> v+ v- only: not cocommutative
    auto bad = r.check_axioms();
    CHECK_FALSE(bad.empty());
    CHECK_THROWS_AS(FrobeniusRule::from_json(r.to_json()), tqft::RuleError);

    auto s = FrobeniusRule::khovanov();
    s.delta[1] = 0;  // split of v- is zero; the algebra stays commutative
    CHECK_FALSE(tqft::check_4tu(s));
    CHECK_THROWS_AS(FrobeniusRule::from_json(nlohmann::json{{"m", 3}}), tqft::RuleError);
  }

  TEST_CASE("pre-registered Khovanov dims") {
    CHECK(dims_of(diagram::parse_pd("U(1)")) == Dims{{{0, -1}, 1}, {{0, 1}, 1}});
    CHECK(dims_of(diagram::parse_pd("X(1,2,2,1)")) == Dims{{{0, -1}, 1}, {{0, 1}, 1}});
    Dims trefoil{{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{2, 7}, 1}, {{3, 7}, 1}, {{3, 9}, 1}};
    auto t = diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    CHECK(oracle::khovanov_dims(pd_of(t)) == trefoil);
    CHECK(dims_of(t) == trefoil);
    Dims fig8{{{-2, -5}, 1}, {{-2, -3}, 1}, {{-1, -3}, 1}, {{-1, -1}, 1}, {{0, -1}, 1},
              {{0, 1}, 1},   {{1, 1}, 1},   {{1, 3}, 1},   {{2, 3}, 1},   {{2, 5}, 1}};
    auto f = diagram::parse_pd("X(1,2,3,4) X(4,5,6,7) X(5,3,2,8) X(8,1,7,6)");
    CHECK(oracle::khovanov_dims(pd_of(f)) == fig8);
    CHECK(dims_of(f) == fig8);
  }

  TEST_CASE("corpus diagrams agree with the brute-force oracle") {
    for (auto& nd : corpus_diagrams()) {
      if (nd.diagram.crossing_count() > 7 || !nd.diagram.loops().empty()) continue;
      CAPTURE(nd.name);
      CHECK(dims_of(nd.diagram) == oracle::khovanov_dims(pd_of(nd.diagram)));
    }
  }

  TEST_CASE("Euler characteristic is the Jones polynomial") {
    for (auto& nd : corpus_diagrams()) {
      CAPTURE(nd.name);
      auto c = tqft::cube_complex(nd.diagram, FrobeniusRule::khovanov());
      CHECK(suites::graded_euler(c) == diagram::kauffman_bracket_jones(nd.diagram));
    }
  }

  TEST_CASE("Bar-Natan homology has dimension 2^components on knots and unlinks") {
    for (auto& nd : corpus_diagrams()) {
      if (nd.diagram.crossing_count() > 8) continue;
      bool knot = nd.diagram.components() == 1;
      bool unlink = nd.name.rfind("unlink", 0) == 0 || nd.name.rfind("unknot", 0) == 0;
      if (!knot && !unlink) continue;
      CAPTURE(nd.name);
      auto h = chain::homology(tqft::cube_complex(nd.diagram, FrobeniusRule::bar_natan()));
      CHECK(h.total == (1LL << nd.diagram.components()));
    }
  }

  TEST_CASE("iterated cone equals the cube; union equals tensor") {
    auto kink = diagram::parse_pd("X(1,2,2,1)");
    for (auto& nd : corpus_diagrams()) {
      if (nd.diagram.crossing_count() > 6) continue;
      CAPTURE(nd.name);
      for (auto r : {FrobeniusRule::khovanov(), FrobeniusRule::bar_natan()}) {
        auto cube = tqft::build_cube(nd.diagram, r);
        CHECK(tqft::iterated_cone(nd.diagram, r) == *cube->complex);
        auto ab = diagram::disjoint_union(nd.diagram, kink);
        auto kc = tqft::build_cube(kink, r);
        auto uc = tqft::build_cube(ab, r);
        auto t = chain::tensor(*cube->complex, *kc->complex);
        CHECK(chain::equal_under(*uc->complex, t, tqft::union_correspondence(*cube, *kc, *uc)));
      }
    }
  }

  TEST_CASE("cube structure") {
    auto t = diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    auto cube = tqft::build_cube(t, FrobeniusRule::khovanov());
    CHECK(cube->complex->size() == 4 + 3 * 2 + 3 * 4 + 8);
    CHECK(cube->complex->gen(0).tag == "000|++");
    CHECK(cube->complex->q_preserving());
    CHECK_FALSE(tqft::build_cube(t, FrobeniusRule::bar_natan())->complex->q_preserving());
    CHECK(chain::verify(*cube->complex).ok());
  }

  TEST_CASE("generator cap") {
    auto t = diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    CHECK_THROWS_AS(tqft::build_cube(t, FrobeniusRule::khovanov(), 10), tqft::CapExceeded);
    setenv("KHCOB_GENERATOR_CAP", "12", 1);
    CHECK(tqft::default_generator_cap() == 12);
    CHECK_THROWS_AS(tqft::cube_complex(t, FrobeniusRule::khovanov()), tqft::CapExceeded);
    unsetenv("KHCOB_GENERATOR_CAP");
    CHECK(tqft::default_generator_cap() == (1ULL << 26));
  }

  TEST_CASE("handle maps have the expected degrees") {
    auto u = diagram::parse_pd("U(1)");
    auto birth = tqft::handle_map(u, diagram::Handle0{}, FrobeniusRule::khovanov());
    CHECK(birth.q_degree == 1);
    auto two = diagram::parse_pd("U(1) U(2)");
    auto saddle = tqft::handle_map(two, diagram::Handle1{1, 2}, FrobeniusRule::khovanov());
    CHECK(saddle.q_degree == -1);
    // saddle after birth is the identity on the nose
    CHECK(chain::compose(saddle, birth).matrix == f2::SparseMap::identity(2));
  }
}
