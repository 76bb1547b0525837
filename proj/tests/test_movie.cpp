#include <doctest.h>

#include "khcob/movie.hpp"
#include "khcob/suites.hpp"

using namespace khcob;
using tqft::FrobeniusRule;

namespace {

movie::Movie mv(const std::string& text) { return movie::parse_movie(text); }

}  // namespace

TEST_SUITE("movie") {
  TEST_CASE("parse and format round trip") {
    auto m = mv("# birth then saddle\nU(1)\nh0  # U(1) U(2)\n\nh1 1 2\n");
    CHECK(m.moves.size() == 2);
    CHECK(m.frames.size() == 3);
    CHECK(m.frames[1].to_pd() == "U(1) U(2)");
    CHECK(m.final_frame().to_pd() == "U(1)");
    auto again = mv(movie::format_movie(m));
    CHECK(again.frames == m.frames);
  }

  TEST_CASE("parse errors name the line") {
    try {
      mv("U(1)\nh0\nh7 1\n");
      FAIL("expected an error");
    } catch (const std::exception& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS(mv("U(1)\nh2 5\n"));
    CHECK_THROWS(mv(""));
  }

  TEST_CASE("MM15 is the identity on the nose under Khovanov") {
    auto m = mv("U(1)\nh0\nh1 1 2\n");
    auto f = movie::induced_map(m, FrobeniusRule::khovanov());
    CHECK(f.matrix == f2::SparseMap::identity(f.source->size()));
    CHECK(f.q_degree == 0);
    auto t = mv("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\nh0\nh1 7 2\n");
    auto ft = movie::induced_map(t, FrobeniusRule::khovanov());
    CHECK(ft.matrix == f2::SparseMap::identity(ft.source->size()));
  }

  TEST_CASE("every canned pair is homotopic under both rules") {
    auto pairs = movie::canned_corpus();
    CHECK(pairs.size() >= 12);
    for (auto& p : pairs)
      for (auto r : {FrobeniusRule::khovanov(), FrobeniusRule::bar_natan()}) {
        CAPTURE(p.name);
        CAPTURE(r.name);
        auto h = movie::verify_movie_move(p.a, p.b, r);
        REQUIRE(h);
        auto [fa, fb] = movie::comparable_maps(p.a, p.b, r);
        CHECK(chain::is_homotopy(fa, fb, *h));
      }
  }

  TEST_CASE("swapping two unknot components is not the identity") {
    auto a = mv("U(1) U(2)\nrelabel 1->2 2->1\n");
    auto b = mv("U(1) U(2)\n");
    CHECK_FALSE(movie::verify_movie_move(a, b, FrobeniusRule::khovanov()));
    CHECK_FALSE(movie::verify_movie_move(a, b, FrobeniusRule::bar_natan()));
  }

  TEST_CASE("frame mismatch") {
    auto a = mv("U(1)\nh0\n");
    auto b = mv("U(1)\n");
    CHECK_THROWS_AS(movie::verify_movie_move(a, b, FrobeniusRule::khovanov()), movie::FrameMismatch);
    auto c = mv("U(2)\n");
    CHECK_THROWS_AS(movie::verify_movie_move(b, c, FrobeniusRule::khovanov()), movie::FrameMismatch);
  }

  TEST_CASE("Reidemeister maps are homotopy equivalences") {
    auto t = diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    std::vector<diagram::Move> moves{
        diagram::R1{1, +1, diagram::Side::left, diagram::Direction::insert},
        diagram::R1{1, -1, diagram::Side::right, diagram::Direction::insert},
        diagram::R2{2, 5, diagram::Direction::insert, {}, {}}};
    for (auto& m : moves)
      for (auto r : {FrobeniusRule::khovanov(), FrobeniusRule::bar_natan()}) {
        CAPTURE(diagram::describe(m));
        auto rm = movie::reidemeister_map(t, m, r, true);
        CHECK(chain::verify_map(rm.rho).ok());
        CHECK(chain::verify_map(rm.rho_prime).ok());
        auto back = chain::compose(rm.rho_prime, rm.rho);
        CHECK(chain::is_homotopy(back, chain::identity_map(rm.rho.source), rm.h_source));
        auto fwd = chain::compose(rm.rho, rm.rho_prime);
        CHECK(chain::is_homotopy(fwd, chain::identity_map(rm.rho.target), rm.h_target));
      }
  }

  TEST_CASE("R3 map on the corpus triangle") {
    auto d = diagram::parse_pd("X(1,2,3,4) X(5,4,6,5) X(6,3,2,1)");
    auto rm = movie::reidemeister_map(d, diagram::R3{{3, 4, 6}}, FrobeniusRule::khovanov(), true);
    auto back = chain::compose(rm.rho_prime, rm.rho);
    CHECK(chain::is_homotopy(back, chain::identity_map(rm.rho.source), rm.h_source));
    CHECK(chain::homology(*rm.rho.source).dims == chain::homology(*rm.rho.target).dims);
  }

  TEST_CASE("concatenation") {
    auto a = mv("U(1)\nh0\n");
    auto b = mv("U(1) U(2)\nh1 1 2\n");
    auto ab = movie::concatenate(a, b);
    CHECK(ab.moves.size() == 2);
    CHECK(ab.final_frame().to_pd() == "U(1)");
  }
}
