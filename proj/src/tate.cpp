#include "modseries/tate.hpp"

#include <mutex>
#include <stdexcept>

#include "modseries/modforms.hpp"
#include "modseries/polynomial.hpp"

namespace modseries::tate {

namespace {

const std::string kPi = "pi";

long three_power(unsigned n) {
  long p = 1;
  for (unsigned i = 0; i < n; ++i) p *= 3;
  return p;
}

// q as a series in w = 1/j, known mod w^n. Reused across calls; only grows.
LaurentSeries q_in_jinv(Exponent n) {
  static std::mutex guard;
  static std::optional<LaurentSeries> cached;
  std::lock_guard lock(guard);
  if (!cached || cached->precision() < n)
    cached = revert(invert(modforms::j_expansion(n - 2)));
  return cached->truncated(n);
}

}  // namespace

LaurentSeries deuring_alpha(Exponent precision) {
  if (precision < 1) throw std::invalid_argument("alpha precision must be >= 1");
  const std::vector<Rat> one_minus_pi{Rat(1), Rat(-1)};
  const LaurentSeries base = LaurentSeries::from_polynomial(kPi, one_minus_pi, precision);
  return unit_root(base, 3).scaled(Rat(3));
}

SeriesCurve deuring_curve(Exponent precision) {
  if (precision < 2) throw std::invalid_argument("Deuring curve precision must be >= 2");
  const LaurentSeries zero = LaurentSeries::zero(kPi, precision);
  return {deuring_alpha(precision), zero, LaurentSeries::constant(kPi, Rat(1), precision), zero,
          zero};
}

WeierstrassCurve<RationalFunction> deuring_curve_symbolic() {
  const RationalFunction alpha(Polynomial::x());
  return {alpha, RationalFunction(0L), RationalFunction(1L), RationalFunction(0L),
          RationalFunction(0L)};
}

LaurentSeries deuring_j_closed_form(Exponent precision) {
  // -27 (1 - pi)(1 - 9 pi)^3 is a polynomial; dividing by pi shifts it down.
  const Polynomial one_minus_pi{1, -1};
  const Polynomial one_minus_9pi{1, -9};
  const Polynomial num = Rat(-27) * (one_minus_pi * pow(one_minus_9pi, 3));
  return to_laurent(num, kPi, precision + 1).shifted(-1);
}

VerificationReport verify_deuring_j(Exponent precision) {
  if (precision < 4) throw std::invalid_argument("Deuring j check needs precision >= 4");
  const SeriesInvariants inv = weierstrass_invariants(deuring_curve(precision));
  const LaurentSeries expected = deuring_j_closed_form(inv.j.precision());
  return compare_series("deuring-j", "j(E) = -27 (t-1)(t-9)^3 / t^3 for the Deuring model",
                        expected, inv.j, precision - 3);
}

bool deuring_j_rational_identity() {
  const Polynomial t = Polynomial::x();
  const RationalFunction cube(Rat(27) * (t - Polynomial::constant(Rat(1))), t);  // alpha^3
  const RationalFunction from_alpha =
      cube * (cube - RationalFunction(24L)) * (cube - RationalFunction(24L)) *
      (cube - RationalFunction(24L)) / (cube - RationalFunction(27L));
  const RationalFunction closed(
      Rat(-27) * (t - Polynomial::constant(Rat(1))) * pow(t - Polynomial::constant(Rat(9)), 3),
      pow(t, 3));
  return from_alpha == closed;
}

ReductionType reduction_type(const SeriesCurve& e, const std::vector<Rat>& square_classes) {
  for (const LaurentSeries* a : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6}) {
    if (a->valuation() < 0) throw std::domain_error("reduction type needs an integral model");
    if (a->precision() < 1) throw PrecisionError("coefficients must be known mod x at least");
  }
  const SeriesInvariants inv = weierstrass_invariants(e);
  ReductionType out{Reduction::good, inv.disc.valuation(), inv.c4.valuation(), {}, {}, {}};
  if (out.disc_valuation == 0) return out;
  if (out.c4_valuation > 0) {
    out.classification = Reduction::additive;
    return out;
  }
  // Reduced curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
  const Rat a1 = e.a1.coefficient(0), a2 = e.a2.coefficient(0), a3 = e.a3.coefficient(0),
            a4 = e.a4.coefficient(0), a6 = e.a6.coefficient(0);
  // F_y = 0 gives y = -(a1 x + a3)/2; F_x = 0 then reduces to a quadratic in x.
  const Polynomial quad(std::vector<Rat>{Rat(a4 + a1 * a3 / 2), Rat(2 * a2 + a1 * a1 / 2), Rat(3)});
  for (const Rat& x0 : rational_roots(quad)) {
    const Rat y0 = -(a1 * x0 + a3) / 2;
    const Rat f = y0 * y0 + a1 * x0 * y0 + a3 * y0 - x0 * x0 * x0 - a2 * x0 * x0 - a4 * x0 - a6;
    if (f != 0) continue;
    out.singular_point = std::make_pair(x0, y0);
    // Tangent cone Y^2 + a1 XY - (3 x0 + a2) X^2.
    const Rat disc = a1 * a1 + 4 * (3 * x0 + a2);
    out.tangent_cone_discriminant = disc;
    out.classification = Reduction::nonsplit_multiplicative;
    for (const Rat& cls : square_classes) {
      if (cls == 0) continue;
      if (exact_root(Rat(disc / cls), 2)) {
        out.classification = Reduction::split_multiplicative;
        out.residue_field_witness = cls;
        break;
      }
    }
    return out;
  }
  throw std::logic_error("positive discriminant valuation but no rational singular point");
}

std::string to_string(Reduction r) {
  switch (r) {
    case Reduction::good:
      return "good";
    case Reduction::split_multiplicative:
      return "split-multiplicative";
    case Reduction::nonsplit_multiplicative:
      return "nonsplit-multiplicative";
    case Reduction::additive:
      return "additive";
  }
  return "?";
}

LaurentSeries tate_parameter(const LaurentSeries& j_series, Exponent precision) {
  if (j_series.is_zero() || j_series.valuation() >= 0)
    throw std::domain_error("Tate parameter needs a j-series with a pole");
  const Exponent k = -j_series.valuation();
  const LaurentSeries w = invert(j_series);
  const Exponent target = std::min(precision, w.precision());
  // q(w) is needed mod w^n with k n >= target.
  const Exponent n = std::max<Exponent>((target + k - 1) / k, 3);
  return compose(q_in_jinv(n), w, target);
}

RootDecomposition unit_decomposition(const LaurentSeries& q_series) {
  return modseries::unit_decomposition(PuiseuxSeries::lift(q_series, 1));
}

TorsionResult torsion_parameters(unsigned n, Exponent terms) {
  if (n < 1) throw std::invalid_argument("torsion level exponent must be >= 1");
  if (terms < 1) throw std::invalid_argument("need at least one term");
  const long m = three_power(n);
  // unit u of q = c pi u carries P_q - 1 coefficients
  const Exponent qprec = terms + 1;
  const SeriesInvariants inv = weierstrass_invariants(deuring_curve(std::max<Exponent>(qprec, 2)));
  LaurentSeries q = tate_parameter(inv.j, qprec);
  const RootDecomposition dec = unit_decomposition(q);
  const RootDecomposition root = frac_root(PuiseuxSeries::lift(q, 1), static_cast<unsigned long>(m));

  std::vector<TorsionParameter> params(static_cast<std::size_t>(m) + 1,
                                       TorsionParameter{0, 0, n, SymbolicConstantRoot(), Rat(0), root.unit});
#pragma omp parallel for schedule(dynamic)
  for (long b = 0; b < m; ++b) {
    auto& p = params[static_cast<std::size_t>(b)];
    p.q_exponent = b;
    p.constant = root.constant.pow(b);
    p.monomial_exponent = root.monomial_exponent * b;
    p.unit = pow_int(root.unit, b);
  }
  auto& eta = params.back();
  eta.zeta_exponent = 1;
  eta.q_exponent = 0;
  eta.unit = pow_int(root.unit, 0);

  TorsionCertificate cert;
  cert.unit_constant_one = true;
  cert.exponent_on_lattice = true;
  for (const auto& p : params) {
    cert.unit_constant_one = cert.unit_constant_one && p.unit.body().valuation() == 0 &&
                             p.unit.body().leading_coefficient() == 1;
    cert.exponent_on_lattice =
        cert.exponent_on_lattice && Rat(p.monomial_exponent * m).get_den() == 1;
  }
  const TorsionParameter& gen = params[1];
  cert.generator_power_back = agrees_with(pow_int(gen.unit, m), dec.unit) &&
                              pow_int(gen.unit, m).precision() >= dec.unit.precision();
  cert.constant_power_back = gen.constant.pow(m).rational_value() == dec.constant.rational_value();
  return {std::move(q), dec, std::move(params), cert};
}

LaurentSeries legendre_lambda(Exponent precision) {
  if (precision < 1) throw std::invalid_argument("lambda precision must be >= 1");
  const std::vector<Rat> one_minus_t4{Rat(1), Rat(0), Rat(0), Rat(0), Rat(-1)};
  const LaurentSeries root = unit_root(LaurentSeries::from_polynomial("t", one_minus_t4, precision), 2);
  return (root + Rat(1)).scaled(make_rat(1, 2));
}

LegendreResult legendre_curve(Exponent precision) {
  if (precision <= 8) throw std::invalid_argument("Legendre curve precision must exceed 8");
  const std::string t = "t";
  const LaurentSeries lambda = legendre_lambda(precision);
  const LaurentSeries zero = LaurentSeries::zero(t, precision);
  SeriesCurve curve{zero, -(lambda + Rat(1)), zero, lambda, zero};
  SeriesInvariants inv = weierstrass_invariants(curve);
  const Polynomial tp = Polynomial::x();
  const Polynomial four_minus = Polynomial::constant(Rat(4)) - pow(tp, 4);
  const RationalFunction closed(Rat(64) * pow(four_minus, 3), pow(tp, 8));
  LaurentSeries jc = to_laurent(closed, t, inv.j.precision());
  return {lambda, std::move(curve), std::move(inv), std::move(jc)};
}

}  // namespace modseries::tate
