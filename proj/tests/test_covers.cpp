#include <doctest.h>

#include "modseries/covers.hpp"
#include "support.hpp"

using namespace modseries;
using namespace modseries::covers;

namespace {
Polynomial poly(std::initializer_list<long> c) { return Polynomial(c); }
}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial p = poly({-1, 0, 1});  // x^2 - 1
  auto [q, r] = divmod(p, poly({-1, 1}));
  CHECK(q == poly({1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(p, poly({1, 2, 1})) == poly({1, 1}));
  CHECK(p.derivative() == poly({0, 2}));
  CHECK(p.evaluate(Rat(3)) == 8);
  CHECK(pow(poly({1, 1}), 3) == poly({1, 3, 3, 1}));
  CHECK(poly({-19683, -486, 1}).to_string() == "x^2 - 486*x - 19683");
  CHECK_THROWS(divmod(p, Polynomial()));
}

TEST_CASE("square-free decomposition and rational roots") {
  const Polynomial x = Polynomial::x();
  const Polynomial f = Rat(5) * (x - Polynomial::constant(Rat(2))) *
                       pow(x + Polynomial::constant(Rat(3)), 3) * pow(poly({1, 0, 1}), 2);
  const auto parts = square_free_decomposition(f);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::make_pair(poly({-2, 1}), 1L));
  CHECK(parts[1] == std::make_pair(poly({1, 0, 1}), 2L));
  CHECK(parts[2] == std::make_pair(poly({3, 1}), 3L));
  const auto roots = rational_roots(Polynomial(std::vector<Rat>{Rat(-1), Rat(0), Rat(9)}));
  CHECK(roots == std::vector<Rat>{make_rat(-1, 3), make_rat(1, 3)});
  CHECK(rational_roots(poly({1, 0, 1})).empty());
  CHECK(rational_roots(poly({0, 0, 1, 1})) == std::vector<Rat>{Rat(-1), Rat(0)});
}

TEST_CASE("resultant and interpolation") {
  // Res(x^2 - 1, x - 2) = (1 - 2)(-1 - 2) = 3
  CHECK(resultant(poly({-1, 0, 1}), poly({-2, 1})) == 3);
  CHECK(resultant(poly({-1, 0, 1}), poly({-1, 1})) == 0);
  const std::vector<std::pair<Rat, Rat>> pts{{Rat(0), Rat(1)}, {Rat(1), Rat(2)}, {Rat(2), Rat(5)}};
  CHECK(interpolate(pts) == poly({1, 0, 1}));
}

TEST_CASE("rational functions") {
  const RationalFunction f = branch_map();
  CHECK(f.degree() == 4);
  CHECK(f.evaluate(Rat(-27)) == ProjectivePoint(Rat(0)));
  CHECK(f.evaluate(Rat(0)).is_infinite());
  CHECK(f.evaluate(ProjectivePoint::infinity()).is_infinite());
  const RationalFunction g(poly({0, 2}), poly({0, 4}));
  CHECK(g == RationalFunction(make_rat(1, 2)));
  const auto s = to_laurent(RationalFunction(poly({1}), poly({0, 0, 1, -1})), "x", 3);
  CHECK(s == testing::series("x", -2, {1, 1, 1, 1, 1}, 3));
}

TEST_CASE("ramification of the branch map") {
  const RationalFunction f = branch_map();
  CHECK(ramification_profile(f, Rat(0)).multiplicities() == std::vector<long>{3, 1});
  CHECK(ramification_profile(f, Rat(1728)).multiplicities() == std::vector<long>{2, 2});
  CHECK(ramification_profile(f, ProjectivePoint::infinity()).multiplicities() ==
        std::vector<long>{3, 1});
  CHECK(ramification_profile(f, Rat(5)).multiplicities() == std::vector<long>{1, 1, 1, 1});
  for (const ProjectivePoint& y : {ProjectivePoint(0L), ProjectivePoint(1728L),
                                   ProjectivePoint::infinity(), ProjectivePoint(7L)})
    CHECK(ramification_profile(f, y).total() == 4);
  const RationalFunction shifted = f - RationalFunction(1728L);
  CHECK(shifted.numerator() == pow(poly({-19683, -486, 1}), 2));
}

TEST_CASE("critical values and Riemann-Hurwitz") {
  const RationalFunction f = branch_map();
  CHECK(critical_value_polynomial(f) == poly({0, 0, 1728L * 1728L, -2 * 1728, 1}));
  const auto rh = riemann_hurwitz_check(f, {Rat(0), Rat(1728), ProjectivePoint::infinity()});
  CHECK(rh.report.passed());
  CHECK(rh.genus == 0);
  CHECK(rh.total_ramification == 6);
  CHECK_THROWS_AS(riemann_hurwitz_check(f, {Rat(0), ProjectivePoint::infinity()}),
                  MissingBranchPoint);
  CHECK_THROWS_AS(riemann_hurwitz_check(f, {Rat(0), Rat(1728)}), MissingBranchPoint);
  // x^2 is ramified over 0 and inf only
  const RationalFunction sq(poly({0, 0, 1}));
  CHECK(riemann_hurwitz_check(sq, {Rat(0), ProjectivePoint::infinity()}).report.passed());
}

TEST_CASE("scaling map") {
  CHECK(scaling_map(Rat(-27)) == ProjectivePoint(Rat(1)));
  CHECK(scaling_map(Rat(0)) == ProjectivePoint(Rat(0)));
  CHECK(scaling_map(ProjectivePoint::infinity()).is_infinite());
}

TEST_CASE("congruence subgroup invariants") {
  const auto g3 = congruence_invariants(GroupKind::full, 3);
  CHECK(g3.cusps == 4);
  CHECK(g3.index == 12);
  CHECK(g3.genus == 0);
  const auto g03 = congruence_invariants(GroupKind::gamma0, 3);
  CHECK(g03.cusps == 2);
  CHECK(g03.nu3 == 1);
  CHECK(g03.nu2 == 0);
  CHECK(g03.index == 4);
  const auto g01 = congruence_invariants(GroupKind::gamma0, 1);
  CHECK(g01.index == 1);
  CHECK(g01.genus == 0);
  CHECK(congruence_invariants(GroupKind::full, 9).genus == 10);
  CHECK(congruence_invariants(GroupKind::full, 7).genus == 3);
  CHECK(congruence_invariants(GroupKind::gamma0, 11).genus == 1);
  CHECK(congruence_invariants(GroupKind::gamma1, 11).genus == 1);
  CHECK(congruence_invariants(GroupKind::gamma1, 13).genus == 2);
  CHECK(congruence_invariants(GroupKind::gamma0, 37).genus == 2);
  CHECK_THROWS(congruence_invariants(GroupKind::full, 0));
}

TEST_CASE("genus formula is integral for every level up to 100") {
  for (GroupKind kind : {GroupKind::full, GroupKind::gamma0, GroupKind::gamma1})
    for (long n = 1; n <= 100; ++n) {
      const auto inv = congruence_invariants(kind, n);
      const Rat g = Rat(1) + make_rat(inv.index, 12) - make_rat(inv.nu2, 4) -
                    make_rat(inv.nu3, 3) - make_rat(inv.cusps, 2);
      CHECK(g == inv.genus);
      CHECK(inv.genus >= 0);
    }
}

TEST_CASE("cover degrees are powers of 3") {
  long expected = 3;
  for (long n = 1; n <= 6; ++n) {
    CHECK(cover_degree(n) == expected);
    long d = cover_degree(n);
    while (d % 3 == 0) d /= 3;
    CHECK(d == 1);
    expected *= 27;
  }
}

TEST_CASE("group kind names") {
  CHECK(parse_group_kind("gamma1") == GroupKind::gamma1);
  CHECK(to_string(GroupKind::full) == "full");
  CHECK_THROWS(parse_group_kind("gamma2"));
}
