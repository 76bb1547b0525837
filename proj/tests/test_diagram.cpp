#include <doctest.h>

#include "khcob/diagram.hpp"
#include "oracle.hpp"

using namespace khcob::diagram;

namespace {

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

DiagramError::Kind error_kind(const std::string& pd) {
  try {
    parse_pd(pd);
  } catch (const DiagramError& e) {
    return e.kind();
  }
  FAIL("no error for " << pd);
  return DiagramError::Kind::MalformedSyntax;
}

LaurentPoly poly(std::initializer_list<std::pair<int, long long>> t) {
  LaurentPoly p;
  for (auto [e, c] : t) p.add(e, c);
  return p;
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("parse, signs and printing") {
    auto d = parse_pd(std::string("# comment\n") + kTrefoil + "\n");
    CHECK(d.crossing_count() == 3);
    CHECK(d.n_plus() == 3);
    CHECK(d.components() == 1);
    CHECK(d.to_pd() == kTrefoil);
    CHECK(parse_pd(d.to_pd()) == d);

    auto hopf = parse_pd("X(1,3,2,4) X(3,1,4,2)");
    CHECK(hopf.n_minus() == 2);
    CHECK(hopf.components() == 2);

    auto u = parse_pd("U(3) U(1)");
    CHECK(u.loops() == std::vector<ArcId>{1, 3});
    CHECK(u.to_pd() == "U(1) U(3)");
    CHECK(parse_pd("").crossing_count() == 0);
  }

  TEST_CASE("signs agree with the oracle orientation") {
    auto d = parse_pd("X(1,2,3,4) X(4,5,6,7) X(5,3,2,8) X(8,1,7,6)");
    oracle::PD pd;
    for (auto& x : d.crossings()) pd.push_back(x.arcs);
    auto s = oracle::signs(pd);
    for (std::size_t i = 0; i < d.crossing_count(); ++i) CHECK(d.sign(i) == s[i]);
  }

  TEST_CASE("validation errors") {
    using K = DiagramError::Kind;
    CHECK(error_kind("X(1,2,3,4)") == K::ArcMultiplicityError);
    CHECK(error_kind("X(1,2,2,1) U(1)") == K::ArcMultiplicityError);
    CHECK(error_kind("X(1,2") == K::MalformedSyntax);
    CHECK(error_kind("Y(1)") == K::MalformedSyntax);
    CHECK(error_kind("U(0)") == K::MalformedSyntax);
    CHECK(error_kind("X(1,2,1,2)") == K::NonPlanar);
    CHECK(error_kind("X(1,3,2,4) X(2,4,1,3)") == K::NonPlanar);
    CHECK(error_kind("X(1,4,2,5) X(3,6,4,1) X(6,2,5,3)") == K::InconsistentOrientation);
  }

  TEST_CASE("mirror, union, braid closure, isomorphism") {
    auto t = parse_pd(kTrefoil);
    auto m = mirror(t);
    CHECK(m.n_minus() == 3);
    CHECK(kauffman_bracket_jones(m) == kauffman_bracket_jones(t).invert_variable());
    auto b = braid_closure(2, {1, 1, 1});
    CHECK(b.n_plus() == 3);
    CHECK(isomorphic(b, t));
    CHECK_FALSE(isomorphic(b, m));
    auto u = disjoint_union(t, parse_pd("U(1)"));
    CHECK(u.components() == 2);
    CHECK(u.crossing_count() == 3);
    CHECK(canonical_form(t) == canonical_form(b));
  }

  TEST_CASE("resolutions and edges") {
    auto t = parse_pd(kTrefoil);
    // all-0 smoothing of a positive diagram is the oriented one: 2 Seifert circles
    CHECK(resolve(t, Resolution{0}).circle_count == 2);
    CHECK(resolve(t, Resolution{7}).circle_count == 3);
    auto e = edge_action(t, 0, 1);
    CHECK(e.merge);
    CHECK(e.crossing == 0);
    auto e2 = edge_action(t, 1, 3);
    CHECK_FALSE(e2.merge);
  }

  TEST_CASE("jones polynomial") {
    CHECK(kauffman_bracket_jones(parse_pd("U(1)")) == poly({{-1, 1}, {1, 1}}));
    CHECK(kauffman_bracket_jones(parse_pd("X(1,2,2,1)")) == kauffman_bracket_jones(parse_pd("U(1)")));
    // q + q^3 + q^5 - q^9
    CHECK(kauffman_bracket_jones(parse_pd(kTrefoil)) == poly({{1, 1}, {3, 1}, {5, 1}, {9, -1}}));
    CHECK(kauffman_bracket_jones(parse_pd("X(1,3,2,4) X(4,2,3,1)")) ==
          poly({{0, 1}, {2, 1}, {4, 1}, {6, 1}}));
  }

  TEST_CASE("faces") {
    auto f = faces(parse_pd(kTrefoil));
    CHECK(f.faces.size() == 5);  // V - E + F = 2 with V = 3, E = 6
  }

  TEST_CASE("moves") {
    auto t = parse_pd(kTrefoil);
    auto r1 = apply_move(t, R1{1, +1, Side::left, Direction::insert});
    CHECK(r1.after.crossing_count() == 4);
    CHECK(r1.after.n_plus() == 4);
    auto back = apply_move(r1.after, R1{7, 0, Side::left, Direction::remove});
    CHECK(back.after == t);

    auto r2 = apply_move(t, R2{2, 5, Direction::insert, {}, {}});
    CHECK(r2.after.crossing_count() == 5);
    CHECK(apply_move(r2.after, R2{9, 7, Direction::remove, {}, {}}).after == t);

    auto u = parse_pd("U(1)");
    auto born = apply_move(u, Handle0{});
    CHECK(born.after.to_pd() == "U(1) U(2)");
    CHECK(apply_move(born.after, Handle1{1, 2}).after == u);
    CHECK(apply_move(born.after, Handle2{2}).after == u);
    CHECK_THROWS_AS(apply_move(t, Handle2{1}), DiagramError);

    auto sw = apply_move(parse_pd("U(1) U(2)"), Relabel{{{1, 2}, {2, 1}}});
    CHECK(sw.after.to_pd() == "U(1) U(2)");
    CHECK_THROWS_AS(apply_move(u, Relabel{{{1, 2}, {3, 2}}}), DiagramError);
  }

  TEST_CASE("R3 twice returns to the start") {
    auto d = parse_pd("X(1,2,3,4) X(5,4,6,5) X(6,3,2,1)");
    auto once = apply_move(d, R3{{3, 4, 6}});
    CHECK_FALSE(once.after == d);
    CHECK(once.after.crossing_count() == 3);
    CHECK(apply_move(once.after, R3{{3, 4, 6}}).after == d);
    CHECK_THROWS_AS(apply_move(d, R3{{1, 2, 5}}), DiagramError);
  }
}
