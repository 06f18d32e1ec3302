#include <doctest.h>

#include "modseries/modforms.hpp"
#include "support.hpp"

using namespace modseries;
using namespace modseries::modforms;
using modseries::testing::series;

TEST_CASE("eta quotient bookkeeping") {
  const EtaQuotient h = hauptmodul_quotient();
  CHECK(h.net_q_exponent() == -1);
  CHECK(h.expand(3) == hauptmodul_h(3));
  const EtaQuotient half{{{1, 1}}};  // eta itself has q^(1/24)
  CHECK(half.net_q_exponent() == make_rat(1, 24));
  CHECK_THROWS(half.expand(4));
}

TEST_CASE("Hauptmodul coefficients") {
  CHECK(hauptmodul_h(7) == series("q", -1, {1, -12, 54, -76, -243, 1188, -1384, -2916}, 7));
  CHECK(invert(hauptmodul_h(5)) == series("q", 1, {1, 12, 90, 508, 2391, 9828}, 7));
}

TEST_CASE("j, Delta and E4") {
  CHECK(j_expansion(4) == series("q", -1, {1, 744, 196884, 21493760, 864299970}, 4));
  CHECK(discriminant_delta(4) == series("q", 1, {1, -24, 252}, 4));
  CHECK(eisenstein_e4(3) == series("q", 0, {1, 240, 2160}, 3));
  CHECK(euler_kernel(3) == series("q", 0, {1, -1, -1}, 3));
}

TEST_CASE("q as a series in 1/h") {
  CHECK(q_in_hinv(8) ==
        series("w", 1, {1, -12, 198, -3748, 76629, -1646064, 36597380}, 8));
}

TEST_CASE("j = (h+27)(h+243)^3/h^3 through 200 orders") {
  const auto r = verify_j_h_identity(201);
  CHECK(r.passed());
  CHECK(r.compared_through >= 199);
  CHECK(r.check == "j-h-identity");
}

TEST_CASE("mutating one coefficient of h breaks the identity at that order") {
  const LaurentSeries h = hauptmodul_h(40);
  const LaurentSeries j = j_expansion(40);
  REQUIRE(check_j_h_identity(h, j, 38).passed());
  for (Exponent k : {Exponent(2), Exponent(17), Exponent(35)}) {
    std::vector<Rat> c(h.coefficients().begin(), h.coefficients().end());
    c[static_cast<std::size_t>(k - h.valuation())] += 1;
    const LaurentSeries bad("q", h.valuation(), c, h.precision());
    const auto r = check_j_h_identity(bad, j, 38);
    CHECK_FALSE(r.passed());
    REQUIRE(r.mismatch.has_value());
    // (h+27)(h+243)^3/h^3 = h + ..., so a change in h_k first shows at q^k
    CHECK(r.mismatch->order == k);
  }
}

TEST_CASE("expansions do not depend on the requested precision") {
  const auto h_small = hauptmodul_h(10);
  const auto j_small = j_expansion(10);
  const auto q_small = q_in_hinv(10);
  for (Exponent p : {Exponent(11), Exponent(37), Exponent(90)}) {
    CHECK(hauptmodul_h(p).truncated(10) == h_small);
    CHECK(j_expansion(p).truncated(10) == j_small);
    CHECK(q_in_hinv(p).truncated(10) == q_small);
  }
}

TEST_CASE("fractional powers of q in 1/h") {
  for (unsigned m = 1; m <= 3; ++m) {
    const long d = m == 1 ? 3 : m == 2 ? 9 : 27;
    const PuiseuxSeries root = q_frac_power_in_h(m, 30);
    CHECK(root.ramification() == d);
    CHECK(root.valuation() == make_rat(1, d));
    CHECK(root.coefficient(make_rat(1, d)) == 1);
    const PuiseuxSeries back = pow_int(root, d).normalized();
    CHECK(back.ramification() == 1);
    CHECK(back.body() == q_in_hinv(30));
  }
  CHECK(q_frac_power_in_h(1, 4).coefficient(make_rat(4, 3)) == -4);
}
