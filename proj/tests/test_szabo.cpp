#include <doctest.h>

#include "khcob/suites.hpp"
#include "khcob/szabo.hpp"

using namespace khcob;

namespace {

const diagram::LinkDiagram& trefoil() {
  static auto d = diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  return d;
}

const szabo::RuleCheck* find(const szabo::RuleReport& r, const std::string& name) {
  for (auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("szabo") {
  TEST_CASE("H maps square to zero and commute") {
    auto cube = tqft::build_cube(trefoil(), tqft::FrobeniusRule::khovanov());
    std::vector<szabo::HMaps> H;
    for (int c = 0; c < 3; ++c) H.push_back(szabo::h_map(*cube, c));
    for (int a = 0; a < 3; ++a) {
      CHECK((H[a].h * H[a].h).is_zero());
      CHECK(H[a].g == H[a].h + f2::SparseMap::identity(cube->complex->size()));
      for (int b = 0; b < 3; ++b) CHECK(H[a].h * H[b].h == H[b].h * H[a].h);
    }
    CHECK_FALSE(H[0].h.is_zero());
  }

  TEST_CASE("khovanov-only decorated complex is the Khovanov cube") {
    auto cube = tqft::build_cube(trefoil(), tqft::FrobeniusRule::khovanov());
    for (int bits = 0; bits < 8; ++bits) {
      szabo::Decoration t{std::uint8_t(bits & 1), std::uint8_t((bits >> 1) & 1),
                          std::uint8_t((bits >> 2) & 1)};
      CHECK(szabo::decorated_complex(*cube, t, szabo::HigherRule::khovanov_only()) == *cube->complex);
    }
  }

  TEST_CASE("double change of decoration is the identity") {
    auto cube = tqft::build_cube(trefoil(), tqft::FrobeniusRule::khovanov());
    szabo::Decoration t{0, 0, 0}, u{1, 0, 1};
    auto there = szabo::change_decoration(*cube, t, u);
    auto back = szabo::change_decoration(*cube, u, t);
    CHECK(back * there == f2::SparseMap::identity(cube->complex->size()));
    CHECK(szabo::change_decoration(*cube, t, t) == f2::SparseMap::identity(cube->complex->size()));
  }

  TEST_CASE("configurations and canonical keys") {
    auto cube = tqft::build_cube(trefoil(), tqft::FrobeniusRule::khovanov());
    szabo::Decoration t{0, 0, 0};
    auto c = szabo::face_configuration(*cube, 0, 1, t);
    CHECK(c.dimension() == 1);
    CHECK(c.connected());
    auto key = szabo::canonical_form(c).key;
    auto back = szabo::parse_key(key);
    CHECK(szabo::canonical_form(back).key == key);
    auto two = szabo::face_configuration(*cube, 0, 3, t);
    CHECK(two.dimension() == 2);
    CHECK_THROWS_AS(szabo::face_configuration(*cube, 1, 2, t), szabo::NotComparable);
  }

  TEST_CASE("khovanov-only passes verification") {
    std::vector<diagram::LinkDiagram> corpus{trefoil(), diagram::parse_pd("U(1) U(2)")};
    auto rep = szabo::verify_rule(szabo::HigherRule::khovanov_only(), corpus);
    CHECK(rep.ok());
    auto rt = szabo::HigherRule::from_json(szabo::HigherRule::khovanov_only().to_json());
    CHECK(rt.table == szabo::HigherRule::khovanov_only().table);
  }

  TEST_CASE("a rule with a disconnected face is rejected") {
    auto rule = suites::higher_rule(std::string(KHCOB_TEST_CORPUS) + "/negative/disconnected.szabo.json");
    CHECK(rule.max_dimension() == 2);
    std::vector<diagram::LinkDiagram> corpus{trefoil()};
    auto rep = szabo::verify_rule(rule, corpus);
    CHECK_FALSE(rep.ok());
    auto disc = find(rep, "disconnected rule");
    REQUIRE(disc);
    CHECK(disc->status == "fail");
  }

  TEST_CASE("malformed rule tables") {
    CHECK_THROWS(szabo::HigherRule::from_json(nlohmann::json{{"name", "x"}, {"faces", {{"bogus", 1}}}}));
  }
}
