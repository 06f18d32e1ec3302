// One PASS/FAIL line per acceptance criterion, with wall-clock timings.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "modseries/covers.hpp"
#include "modseries/modforms.hpp"
#include "modseries/tate.hpp"
#include "modseries/verify.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace modseries;
using modseries::testing::series;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0 = no timing requirement
  std::function<Outcome()> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome hauptmodul() {
  const auto h = modforms::hauptmodul_h(199);
  const bool ok = h.truncated(5) == series("q", -1, {1, -12, 54, -76, -243, 1188}, 5) &&
                  h.precision() == 199;
  return {ok, "h = " + h.truncated(5).to_string()};
}

Outcome reversion() {
  const auto q = modforms::q_in_hinv(6);
  return {q == series("w", 1, {1, -12, 198, -3748, 76629}, 6), q.to_string()};
}

Outcome identity() {
  const auto r = modforms::verify_j_h_identity(201);
  const Exponent orders = r.compared_through + 2;  // from q^-1
  return {r.passed() && orders >= 200, std::to_string(orders) + " orders compared"};
}

Outcome j_expansion() {
  const auto j = modforms::j_expansion(3);
  return {j == series("q", -1, {1, 744, 196884, 21493760}, 3), j.to_string()};
}

Outcome deuring_j() {
  const auto r = tate::verify_deuring_j(203);
  const Exponent orders = r.compared_through + 2;
  return {r.passed() && orders >= 200, std::to_string(orders) + " orders compared"};
}

Outcome tate_parameter() {
  const auto inv = weierstrass_invariants(tate::deuring_curve(104));
  const auto q = tate::tate_parameter(inv.j, 103);
  const bool lead = q.valuation() == 1 && q.coefficient(1) == make_rat(-1, 27) &&
                    q.coefficient(2) == make_rat(-4, 243);
  const auto back = compose(modforms::j_expansion(102).with_variable("pi"), q);
  const Exponent orders = std::min(back.precision(), inv.j.precision()) + 1;  // from pi^-1
  const bool round = agrees_with(back, inv.j) && orders >= 100;
  return {lead && round, "q = " + q.truncated(3).to_string() + ", round-trip through " +
                             std::to_string(orders) + " orders, exact rationals"};
}

Outcome unit_roots() {
  const auto inv = weierstrass_invariants(tate::deuring_curve(102));
  const auto q = tate::tate_parameter(inv.j, 101);
  const auto dec = tate::unit_decomposition(q);
  bool ok = dec.constant.rational_value() == make_rat(-1, 27) && dec.monomial_exponent == 1 &&
            dec.unit.body().coefficient(0) == 1 && dec.unit.body().precision() >= 100;
  const auto& u = dec.unit.body();
  for (unsigned long m : {3ul, 9ul, 27ul}) {
    const auto r = unit_root(u, m);
    ok = ok && r.precision() >= 100 && pow_int(r, static_cast<long>(m)) == u;
  }
  return {ok, "q = -1/27 * pi * u, u^(1/3^n) certified for n = 1, 2, 3"};
}

Outcome alpha() {
  const auto a = tate::deuring_alpha(200);
  const bool cube = pow_int(a.scaled(make_rat(1, 3)), 3) ==
                    LaurentSeries::from_polynomial("pi", std::vector<Rat>{Rat(1), Rat(-1)}, 200);
  const bool coeffs = a.coefficient(2) == make_rat(-1, 3) && a.coefficient(3) == make_rat(-5, 27);
  return {cube && coeffs,
          "pi^3 coefficient " + a.coefficient(3).get_str() + " (printed -10/9 fails the cube-back)"};
}

Outcome reduction() {
  const auto rt = tate::reduction_type(tate::deuring_curve(4), {Rat(1), Rat(-3)});
  const bool ok = rt.classification == tate::Reduction::split_multiplicative &&
                  rt.disc_valuation == 1 && rt.c4_valuation == 0 &&
                  rt.tangent_cone_discriminant == Rat(-3) && rt.residue_field_witness == Rat(-3);
  return {ok, tate::to_string(rt.classification) + ", tangent cone discriminant " +
                  (rt.tangent_cone_discriminant ? rt.tangent_cone_discriminant->get_str() : "?")};
}

Outcome ramification() {
  using namespace covers;
  const auto f = branch_map();
  const bool profiles =
      ramification_profile(f, Rat(0)).multiplicities() == std::vector<long>{3, 1} &&
      ramification_profile(f, Rat(1728)).multiplicities() == std::vector<long>{2, 2} &&
      ramification_profile(f, ProjectivePoint::infinity()).multiplicities() == std::vector<long>{3, 1};
  const Polynomial quad(std::vector<Rat>{Rat(-19683), Rat(-486), Rat(1)});
  const bool square = (f - RationalFunction(1728L)).numerator() == pow(quad, 2);
  const auto rh = riemann_hurwitz_check(f, {Rat(0), Rat(1728), ProjectivePoint::infinity()});
  return {profiles && square && rh.report.passed() && rh.genus == 0,
          "{3,1} / {2,2} / {3,1}, genus " + std::to_string(rh.genus)};
}

Outcome congruence() {
  using namespace covers;
  bool ok = congruence_invariants(GroupKind::full, 3).cusps == 4;
  const auto g0 = congruence_invariants(GroupKind::gamma0, 3);
  ok = ok && g0.cusps == 2 && g0.nu3 == 1;
  for (GroupKind kind : {GroupKind::full, GroupKind::gamma0, GroupKind::gamma1})
    for (long n = 1; n <= 100; ++n) {
      const auto inv = congruence_invariants(kind, n);
      ok = ok && Rat(1) + make_rat(inv.index, 12) - make_rat(inv.nu2, 4) - make_rat(inv.nu3, 3) -
                         make_rat(inv.cusps, 2) == inv.genus;
    }
  ok = ok && cover_degree(1) == 3 && cover_degree(2) == 81 && cover_degree(3) == 2187;
  return {ok, "degrees 3, 81, 2187"};
}

Outcome legendre() {
  const auto leg = tate::legendre_curve(208);
  const auto two = leg.lambda.scaled(Rat(2)) - Rat(1);
  const bool lambda_ok =
      two * two == LaurentSeries::from_polynomial("t", std::vector<Rat>{1, 0, 0, 0, -1}, 208);
  const bool j_ok = leg.invariants.j == leg.j_closed_form;
  return {lambda_ok && j_ok, "j = " + leg.invariants.j.truncated(-3).to_string()};
}

Outcome properties_and_suite() {
  using namespace modseries::testing;
  const int failures = ring_axiom_failures(1, kPropertyCases) + reversion_failures(2, kPropertyCases) +
                       unit_root_failures(3, kPropertyCases) + frac_root_failures(4, kPropertyCases);
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = verify::run_suite(verify::Suite::all, 200);
  const double suite_seconds = seconds_since(t0);
  const bool suite_ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  std::ostringstream detail;
  detail << 4 * kPropertyCases << " property cases, " << failures << " failures; verify all --terms 200 "
         << std::fixed << std::setprecision(2) << suite_seconds << " s";
  return {failures == 0 && suite_ok && suite_seconds < 30.0, detail.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Hauptmodul expansion", 1.0, hauptmodul},
      {2, "reversion q(1/h)", 0, reversion},
      {3, "j = (h+27)(h+243)^3/h^3 through 200 orders", 5.0, identity},
      {4, "j expansion", 0, j_expansion},
      {5, "Deuring j through 200 orders", 0, deuring_j},
      {6, "Tate parameter and round-trip", 0, tate_parameter},
      {7, "unit decomposition and 3^n-th roots", 0, unit_roots},
      {8, "alpha consistency", 0, alpha},
      {9, "reduction type", 0, reduction},
      {10, "ramification and Riemann-Hurwitz", 0, ramification},
      {11, "congruence invariants", 0, congruence},
      {12, "Legendre example", 0, legendre},
      {13, "property suites and full verify", 30.0, properties_and_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = seconds_since(t0);
    const bool in_time = c.budget_seconds == 0 || s < c.budget_seconds;
    const bool ok = o.ok && in_time;
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title
              << "  (" << std::fixed << std::setprecision(3) << s << " s"
              << (c.budget_seconds > 0 ? ", budget " + std::to_string(static_cast<int>(c.budget_seconds)) + " s" : "")
              << ")  " << o.detail << "\n";
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
