#include "modseries/verify.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <stdexcept>

#include "modseries/covers.hpp"
#include "modseries/modforms.hpp"
#include "modseries/tate.hpp"

namespace modseries::verify {

namespace {

using Reports = std::vector<VerificationReport>;

struct Check {
  Suite suite;
  std::string name;
  std::function<Reports(Exponent)> run;
};

LaurentSeries known(const std::string& var, Exponent valuation, std::initializer_list<Rat> values) {
  const std::vector<Rat> c(values);
  return LaurentSeries::from_polynomial(var, c, valuation + static_cast<Exponent>(c.size()),
                                        valuation);
}

LaurentSeries polynomial(const std::string& var, std::initializer_list<Rat> values,
                         Exponent precision) {
  const std::vector<Rat> c(values);
  return LaurentSeries::from_polynomial(var, c, precision);
}

std::string joined(const std::vector<long>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

long three_power(long n) {
  long p = 1;
  while (n-- > 0) p *= 3;
  return p;
}

// ---- Hauptmodul and j ------------------------------------------------------

Reports hauptmodul_checks(Exponent terms) {
  const LaurentSeries h = modforms::hauptmodul_h(terms - 1);
  Reports out;
  out.push_back(compare_series("hauptmodul-expansion",
                               "h = (eta(z)/eta(3z))^12 = q^-1 - 12 + 54q - 76q^2 - ...",
                               known("q", -1, {1, -12, 54, -76, -243, 1188, -1384, -2916}), h, 6));
  bool integral = true;
  for (const Rat& c : h.coefficients()) integral = integral && c.get_den() == 1;
  out.push_back(boolean_report("hauptmodul-integrality", "h has integer coefficients", integral,
                               "integers", "non-integral coefficient"));
  out.back().compared_through = h.precision() - 1;
  out.back().requested_through = terms - 2;
  return out;
}

Reports j_checks(Exponent terms) {
  return {compare_series("j-expansion", "j = E4^3/Delta = q^-1 + 744 + 196884q + ...",
                         known("q", -1, {1, 744, 196884, 21493760, 864299970}),
                         modforms::j_expansion(terms - 1), 3)};
}

Reports identity_check(Exponent terms) {
  VerificationReport r = modforms::verify_j_h_identity(terms - 1);
  r.notes.push_back("h and j computed independently from eta products and E4^3/Delta");
  return {r};
}

Reports q_in_hinv_checks(Exponent terms) {
  const LaurentSeries q = modforms::q_in_hinv(terms + 1);
  Reports out;
  out.push_back(compare_series("q-in-hinv", "q = w - 12w^2 + 198w^3 - ... with w = 1/h",
                               known("w", 1, {1, -12, 198, -3748, 76629, -1646064, 36597380}), q,
                               7));
  const LaurentSeries h = modforms::hauptmodul_h(terms - 1).with_variable("w");
  const LaurentSeries back = compose(h, q);
  out.push_back(compare_series("q-in-hinv-roundtrip", "h(q(w)) = 1/w",
                               LaurentSeries::monomial("w", Rat(1), -1, terms + 1), back,
                               terms - 2));
  return out;
}

Reports frac_power_checks(Exponent terms) {
  const LaurentSeries q = modforms::q_in_hinv(terms + 1);
  Reports out;
  for (unsigned m = 1; m <= 3; ++m) {
    const long d = three_power(m);
    const std::string name = "q-frac-power-m" + std::to_string(m);
    const PuiseuxSeries root = modforms::q_frac_power_in_h(m, terms + 1);
    const Rat lead = root.coefficient(make_rat(1, d));
    if (lead != 1) {
      out.push_back(boolean_report(name, "q^(1/3^m) = w^(1/3^m) (1 + O(w))", false, "b_0 = 1",
                                   "b_0 = " + lead.get_str()));
      continue;
    }
    const PuiseuxSeries back = pow_int(root, d).normalized();
    if (back.ramification() != 1) {
      out.push_back(boolean_report(name, "(q^(1/3^m))^(3^m) = q", false, "integral exponents",
                                   "ramification " + std::to_string(back.ramification())));
      continue;
    }
    VerificationReport r =
        compare_series(name, "(q^(1/3^m))^(3^m) = q with q^(1/3^m) = w^(1/3^m) (1 + O(w))", q,
                       back.body(), terms);
    r.notes.push_back("b_{0," + std::to_string(m) + "} = 1; coefficients rational");
    out.push_back(std::move(r));
  }
  return out;
}

// ---- Deuring curve and Tate parameter ----------------------------------------

Reports alpha_checks(Exponent terms) {
  const LaurentSeries alpha = tate::deuring_alpha(terms);
  Reports out;
  out.push_back(compare_series("deuring-alpha-cube", "alpha^3 = 27 (1 - pi)",
                               polynomial("pi", {1, -1}, terms),
                               pow_int(alpha.scaled(make_rat(1, 3)), 3), terms - 1));
  const LaurentSeries expected =
      known("pi", 0, {3, -1, make_rat(-1, 3), make_rat(-5, 27), make_rat(-10, 81), make_rat(-22, 243)});
  VerificationReport r = compare_series("deuring-alpha-coefficients",
                                        "alpha = 3 - pi - pi^2/3 - 5 pi^3/27 - ...", expected,
                                        alpha, 5);
  r.notes.push_back("pi^3 coefficient is -5/27; the value -10/9 is inconsistent with "
                    "alpha^3 = 27(1 - pi)");
  out.push_back(std::move(r));
  return out;
}

Reports deuring_j_checks(Exponent terms) {
  Reports out;
  out.push_back(tate::verify_deuring_j(terms + 2));
  out.push_back(boolean_report("deuring-j-rational",
                               "alpha^3 (alpha^3 - 24)^3/(alpha^3 - 27) = -27(t-1)(t-9)^3/t^3",
                               tate::deuring_j_rational_identity(), "identity of rational functions",
                               "rational functions differ"));
  const auto inv = weierstrass_invariants(tate::deuring_curve_symbolic());
  const Polynomial a = Polynomial::x();
  const RationalFunction disc(pow(a, 3) - Polynomial::constant(Rat(27)));
  const RationalFunction c4(a * (pow(a, 3) - Polynomial::constant(Rat(24))));
  const bool ok = inv.disc == disc && inv.c4 == c4;
  out.push_back(boolean_report("deuring-invariants", "Delta = alpha^3 - 27, c4 = alpha(alpha^3 - 24)",
                               ok, disc.to_string() + ", " + c4.to_string(),
                               inv.disc.to_string() + ", " + inv.c4.to_string()));
  return out;
}

Reports reduction_checks(Exponent) {
  const auto curve = tate::deuring_curve(4);
  const auto over_q3 = tate::reduction_type(curve, {Rat(1), Rat(-3)});
  const auto over_q = tate::reduction_type(curve, {Rat(1)});
  const bool point_ok = over_q3.singular_point &&
                        *over_q3.singular_point == std::make_pair(Rat(-1), Rat(1));
  const bool ok = over_q3.classification == tate::Reduction::split_multiplicative &&
                  over_q3.disc_valuation == 1 && over_q3.c4_valuation == 0 && point_ok &&
                  over_q3.tangent_cone_discriminant == Rat(-3) &&
                  over_q.classification == tate::Reduction::nonsplit_multiplicative;
  VerificationReport r = boolean_report(
      "reduction-type", "split multiplicative reduction at pi = 0 over Q(sqrt(-3))", ok,
      "split over Q(sqrt(-3)), nonsplit over Q, node (-1, 1), cone discriminant -3",
      to_string(over_q3.classification) + " / " + to_string(over_q.classification));
  r.notes.push_back("v(Delta) = " + std::to_string(over_q3.disc_valuation) +
                    ", v(c4) = " + std::to_string(over_q3.c4_valuation));
  if (over_q3.tangent_cone_discriminant)
    r.notes.push_back("tangent cone discriminant " + over_q3.tangent_cone_discriminant->get_str());
  return {r};
}

LaurentSeries deuring_tate_q(Exponent terms) {
  const auto inv = weierstrass_invariants(tate::deuring_curve(terms + 2));
  return tate::tate_parameter(inv.j, terms + 1);
}

Reports tate_checks(Exponent terms) {
  const auto inv = weierstrass_invariants(tate::deuring_curve(terms + 2));
  const LaurentSeries q = tate::tate_parameter(inv.j, terms + 1);
  Reports out;
  out.push_back(compare_series(
      "tate-parameter", "q(E) = -pi/27 - 4 pi^2/243 - 22 pi^3/2187 - ...",
      known("pi", 1,
            {make_rat(-1, 27), make_rat(-4, 243), make_rat(-22, 2187), make_rat(-3748, 531441),
             make_rat(-25543, 4782969), make_rat(-182896, 43046721),
             Rat("-36597380/10460353203")}),
      q, 7));
  out.back().notes.push_back("known through pi^" + std::to_string(q.precision() - 1) +
                             "; all coefficients rational");

  const LaurentSeries j_of_q = compose(modforms::j_expansion(terms - 1).with_variable("pi"), q);
  out.push_back(compare_series("tate-roundtrip", "j(q(E)) = j(E)", inv.j, j_of_q, terms - 2));

  const LaurentSeries via_h =
      compose(modforms::q_in_hinv(terms + 1).with_variable("pi"),
              LaurentSeries::monomial("pi", make_rat(-1, 27), 1, terms + 2));
  out.push_back(compare_series("tate-cross-check", "q(E) = q(w) at w = 1/h = -pi/27", via_h, q,
                               terms));
  return out;
}

Reports unit_checks(Exponent terms) {
  const LaurentSeries q = deuring_tate_q(terms);
  const RootDecomposition dec = tate::unit_decomposition(q);
  const bool shape = dec.constant.rational_value() == make_rat(-1, 27) &&
                     dec.monomial_exponent == 1 && dec.unit.coefficient(Rat(0)) == 1 &&
                     dec.unit.coefficient(Rat(1)) == make_rat(4, 9) &&
                     dec.unit.coefficient(Rat(2)) == make_rat(22, 81);
  const PuiseuxSeries back = dec.power_back(1);
  const bool ok = shape && back.ramification() == 1 && agrees_with(back.body(), q) &&
                  back.body().precision() == q.precision();
  return {boolean_report("tate-unit", "q = -(1/27) pi u with u = 1 + 4pi/9 + 22pi^2/81 + ...", ok,
                         "-1/27 * pi * (1 + 4/9 pi + 22/81 pi^2 + ...)",
                         dec.constant.to_string() + " * pi^" + dec.monomial_exponent.get_str() +
                             " * (" + dec.unit.to_string() + ")")};
}

// ---- 3^n-torsion -------------------------------------------------------------

Reports torsion_check(unsigned n, Exponent terms) {
  const long m = three_power(n);
  const tate::TorsionResult res = tate::torsion_parameters(n, terms);
  const auto& gen = res.parameters.at(1);
  const bool constant_ok = gen.constant == SymbolicConstantRoot(make_rat(-1, 27), static_cast<unsigned long>(m)) &&
                           (n != 1 || gen.constant.rational_value() == make_rat(-1, 3));
  const bool unit_ok = gen.unit.coefficient(Rat(1)) == make_rat(4, 9) / m;
  const bool ok = res.certificate.ok() && constant_ok && unit_ok &&
                  res.parameters.size() == static_cast<std::size_t>(m) + 1 &&
                  gen.monomial_exponent == make_rat(1, m);
  const std::string name = "torsion-n" + std::to_string(n);
  VerificationReport r = boolean_report(
      name, "q^(b/3^n) = c^b pi^(b/3^n) u^(b/3^n) for A[3^n] with u = 1 + O(pi)", ok,
      "certified decomposition with constant (-1/27)^(1/3^n)",
      std::string("certificate ") + (res.certificate.ok() ? "ok" : "failed") + ", constant " +
          gen.constant.to_string());
  r.compared_through = gen.unit.body().precision() - 1;
  r.requested_through = terms - 1;
  if (r.compared_through < r.requested_through && r.passed()) {
    r.status = Status::fail;
    r.mismatch = Mismatch{r.compared_through + 1, "known coefficient", "beyond provable precision"};
  }
  r.notes.push_back("q^(1/" + std::to_string(m) + ") = " + gen.constant.to_string() + " * pi^(1/" +
                    std::to_string(m) + ") * (1 + " + gen.unit.coefficient(Rat(1)).get_str() +
                    "*pi + ...)");
  r.notes.push_back(std::to_string(res.parameters.size()) +
                    " representatives: q^(b/3^n) for b in Z/3^n and the root of unity eta");
  return {r};
}

// ---- covers ------------------------------------------------------------------

Reports branch_checks(Exponent) {
  using namespace covers;
  const RationalFunction f = branch_map();
  Reports out;
  const Polynomial x = Polynomial::x();
  const bool map_ok = f.degree() == 4 &&
                      f.numerator() == (x + Polynomial::constant(Rat(27))) *
                                           pow(x + Polynomial::constant(Rat(243)), 3) &&
                      f.denominator() == pow(x, 3);
  out.push_back(boolean_report("branch-map", "j = (h+27)(h+243)^3/h^3 has degree 4", map_ok,
                               "degree 4", f.to_string()));

  struct Expectation {
    std::string name;
    ProjectivePoint point;
    std::vector<long> profile;
  };
  const std::vector<Expectation> fibers{{"ramification-0", Rat(0), {3, 1}},
                                        {"ramification-1728", Rat(1728), {2, 2}},
                                        {"ramification-inf", ProjectivePoint::infinity(), {3, 1}}};
  for (const auto& e : fibers) {
    const RamificationProfile p = ramification_profile(f, e.point);
    std::string where;
    for (const auto& pts : p.points) where += (where.empty() ? "" : "; ") + pts.describe();
    VerificationReport r = boolean_report(e.name, "fiber of j over " + e.point.to_string(),
                                          p.multiplicities() == e.profile, joined(e.profile),
                                          joined(p.multiplicities()));
    r.notes.push_back(where);
    out.push_back(std::move(r));
  }
  const Polynomial quad = x * x - Rat(486) * x - Polynomial::constant(Rat(19683));
  const auto fiber1728 = ramification_profile(f, Rat(1728));
  const bool quad_ok = fiber1728.points.size() == 1 &&
                       std::holds_alternative<Polynomial>(fiber1728.points[0].where) &&
                       std::get<Polynomial>(fiber1728.points[0].where) == quad;
  out.push_back(boolean_report("ramification-1728-points", "f - 1728 = (x^2 - 486x - 19683)^2/x^3",
                               quad_ok, quad.to_string(), fiber1728.points.empty() ? "none" : fiber1728.points[0].describe()));

  const RiemannHurwitzResult rh =
      riemann_hurwitz_check(f, {Rat(0), Rat(1728), ProjectivePoint::infinity()});
  out.push_back(rh.report);

  bool caught = false;
  try {
    riemann_hurwitz_check(f, {Rat(0), ProjectivePoint::infinity()});
  } catch (const MissingBranchPoint&) {
    caught = true;
  }
  out.push_back(boolean_report("branch-set-complete",
                               "every critical value of j lies in {0, 1728, inf}", caught,
                               "omitting 1728 is detected", "incomplete branch set accepted"));

  const bool scale_ok = scaling_map(Rat(-27)) == ProjectivePoint(Rat(1)) &&
                        scaling_map(Rat(0)) == ProjectivePoint(Rat(0)) &&
                        scaling_map(ProjectivePoint::infinity()).is_infinite();
  out.push_back(boolean_report("scaling-map", "x -> -x/27 sends -27, 0, inf to 1, 0, inf",
                               scale_ok, "1, 0, inf", "different images"));
  return out;
}

Reports congruence_checks(Exponent) {
  using namespace covers;
  Reports out;
  const auto g0 = congruence_invariants(GroupKind::gamma0, 3);
  const auto g3 = congruence_invariants(GroupKind::full, 3);
  const auto g9 = congruence_invariants(GroupKind::full, 9);
  const bool ok = g0.index == 4 && g0.cusps == 2 && g0.nu2 == 0 && g0.nu3 == 1 && g0.genus == 0 &&
                  g3.index == 12 && g3.cusps == 4 && g3.genus == 0 && g9.index == 324 &&
                  g9.cusps == 36 && g9.genus == 10;
  out.push_back(boolean_report(
      "congruence-invariants", "X0(3) and X(3) have genus 0, X(9) has genus 10", ok,
      "Gamma0(3): 4/2/0/1/0, Gamma(3): 12/4, Gamma(9): 324/36/10",
      "Gamma0(3): " + std::to_string(g0.index) + "/" + std::to_string(g0.cusps) + "/" +
          std::to_string(g0.nu2) + "/" + std::to_string(g0.nu3) + "/" + std::to_string(g0.genus) +
          ", Gamma(9) genus " + std::to_string(g9.genus)));

  std::string bad;
  for (GroupKind kind : {GroupKind::full, GroupKind::gamma0, GroupKind::gamma1}) {
    for (long n = 1; n <= 100 && bad.empty(); ++n) {
      try {
        const auto inv = congruence_invariants(kind, n);
        if (inv.genus < 0) bad = to_string(kind) + "(" + std::to_string(n) + ")";
      } catch (const std::logic_error&) {
        bad = to_string(kind) + "(" + std::to_string(n) + ")";
      }
    }
  }
  out.push_back(boolean_report("genus-formula", "g = 1 + index/12 - nu2/4 - nu3/3 - cusps/2 is a "
                               "nonnegative integer for N <= 100",
                               bad.empty(), "all integral", "fails at " + bad));

  bool degrees_ok = true;
  std::string degrees;
  for (long n = 1; n <= 6; ++n) {
    const long deg = cover_degree(n);
    degrees += (n > 1 ? ", " : "") + std::to_string(deg);
    degrees_ok = degrees_ok && deg == three_power(3 * n - 2);
  }
  out.push_back(boolean_report("cover-degree", "deg X(3^n) -> X0(3) = 3^(3n-2)", degrees_ok,
                               "3, 81, 2187, 59049, 1594323, 43046721", degrees));
  return out;
}

// ---- Legendre ----------------------------------------------------------------

Reports legendre_checks(Exponent terms) {
  const tate::LegendreResult leg = tate::legendre_curve(terms + 8);
  Reports out;
  const LaurentSeries two_lambda_minus_one = leg.lambda.scaled(Rat(2)) - Rat(1);
  out.push_back(compare_series("legendre-lambda", "(2 lambda - 1)^2 = 1 - t^4",
                               polynomial("t", {1, 0, 0, 0, -1}, terms + 8),
                               two_lambda_minus_one * two_lambda_minus_one, terms + 7));
  out.push_back(compare_series("legendre-j", "j(E_lambda) = 64 (4 - t^4)^3/t^8", leg.j_closed_form,
                               leg.invariants.j, terms - 9));
  const LaurentSeries q = tate::tate_parameter(leg.invariants.j, terms + 8);
  const LaurentSeries back = compose(modforms::j_expansion(terms).with_variable("t"), q);
  VerificationReport r = compare_series("legendre-tate", "j(q(E_lambda)) = j(E_lambda)",
                                        leg.invariants.j, back, terms - 9);
  r.notes.push_back("q = " + q.truncated(std::min<Exponent>(q.precision(), 17)).to_string());
  out.push_back(std::move(r));
  return out;
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks{
      {Suite::identity, "hauptmodul", hauptmodul_checks},
      {Suite::identity, "j", j_checks},
      {Suite::identity, "identity", identity_check},
      {Suite::identity, "q-in-hinv", q_in_hinv_checks},
      {Suite::identity, "frac-powers", frac_power_checks},
      {Suite::tate, "alpha", alpha_checks},
      {Suite::tate, "deuring-j", deuring_j_checks},
      {Suite::tate, "reduction", reduction_checks},
      {Suite::tate, "tate", tate_checks},
      {Suite::tate, "unit", unit_checks},
      {Suite::torsion, "torsion-1", [](Exponent t) { return torsion_check(1, t); }},
      {Suite::torsion, "torsion-2", [](Exponent t) { return torsion_check(2, t); }},
      {Suite::torsion, "torsion-3", [](Exponent t) { return torsion_check(3, t); }},
      {Suite::covers, "branch", branch_checks},
      {Suite::covers, "congruence", congruence_checks},
      {Suite::legendre, "legendre", legendre_checks},
  };
  return checks;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::all, Suite::identity, Suite::tate, Suite::covers, Suite::torsion,
                  Suite::legendre})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::all:
      return "all";
    case Suite::identity:
      return "identity";
    case Suite::tate:
      return "tate";
    case Suite::covers:
      return "covers";
    case Suite::torsion:
      return "torsion";
    case Suite::legendre:
      return "legendre";
  }
  return "?";
}

std::vector<std::string> suite_names() {
  return {"all", "identity", "tate", "covers", "torsion", "legendre"};
}

std::vector<VerificationReport> run_suite(Suite suite, Exponent terms) {
  if (terms < kMinTerms)
    throw std::invalid_argument("verify needs --terms >= " + std::to_string(kMinTerms));
  std::vector<const Check*> selected;
  for (const Check& c : registry())
    if (suite == Suite::all || c.suite == suite) selected.push_back(&c);

  std::vector<Reports> results(selected.size());
  const long count = static_cast<long>(selected.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const Check& c = *selected[static_cast<std::size_t>(i)];
    try {
      results[static_cast<std::size_t>(i)] = c.run(terms);
    } catch (const std::exception& e) {
      results[static_cast<std::size_t>(i)] = {
          boolean_report(c.name, "check raised an exception", false, "completion", e.what())};
    }
  }
  Reports out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.check < b.check; });
  return out;
}

}  // namespace modseries::verify
