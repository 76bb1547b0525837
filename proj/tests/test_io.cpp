#include <doctest.h>

#include "khcob/io.hpp"
#include "khcob/tqft.hpp"

using namespace khcob;

TEST_SUITE("io") {
  TEST_CASE("complex JSON round trip") {
    auto t = diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    auto c = tqft::cube_complex(t, tqft::FrobeniusRule::bar_natan());
    auto j = io::to_json(c);
    CHECK(j["kind"] == "complex");
    CHECK(j["generators"].size() == c.size());
    auto back = io::complex_from_json(j);
    CHECK(back == c);
    CHECK(io::to_json(back).dump() == j.dump());
  }

  TEST_CASE("malformed complexes") {
    using nlohmann::json;
    CHECK_THROWS_AS(io::complex_from_json(json::array()), io::FormatError);
    json bad_id = {{"generators", {{{"id", 1}, {"h", 0}, {"q", 0}}}}, {"differential", json::array()}};
    CHECK_THROWS_AS(io::complex_from_json(bad_id), io::FormatError);
    json bad_entry = {{"generators", {{{"id", 0}, {"h", 0}, {"q", 0}}}}, {"differential", {{0, 3}}}};
    CHECK_THROWS_AS(io::complex_from_json(bad_entry), io::FormatError);
  }

  TEST_CASE("homology and pages serialize deterministically") {
    auto t = diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    auto c = tqft::cube_complex(t, tqft::FrobeniusRule::bar_natan());
    auto s = io::to_json(chain::spectral_pages(c));
    CHECK(s["stable"]["total"] == 2);
    CHECK(s.dump() == io::to_json(chain::spectral_pages(c)).dump());
    auto h = io::to_json(chain::homology(tqft::cube_complex(t, tqft::FrobeniusRule::khovanov())));
    CHECK(h["total"] == 6);
    CHECK(h["dims"][0] == nlohmann::json{{"dim", 1}, {"h", 0}, {"q", 1}});
  }
}
