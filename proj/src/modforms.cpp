#include "modseries/modforms.hpp"

#include <stdexcept>

#include "modseries/kernels.hpp"

namespace modseries::modforms {

namespace {

const std::string kQ = "q";

LaurentSeries euler_at_level(long m, Exponent precision) {
  // E(q^m) mod q^precision
  const Exponent base = (precision + m - 1) / m;
  LaurentSeries e = euler_kernel(std::max<Exponent>(base, 1)).expanded(m);
  return e.precision() > precision ? e.truncated(precision) : e;
}

}  // namespace

Rat EtaQuotient::net_q_exponent() const {
  long total = 0;
  for (const auto& [m, r] : factors) total += m * r;
  return make_rat(total, 24);
}

LaurentSeries EtaQuotient::expand(Exponent precision) const {
  const Rat net = net_q_exponent();
  if (net.get_den() != 1)
    throw std::domain_error("eta quotient with fractional q-exponent " + net.get_str() +
                            " is not a Laurent series in q");
  const Exponent shift = net.get_num().get_si();
  const Exponent rel = precision - shift;
  LaurentSeries acc = LaurentSeries::constant(kQ, Rat(1), rel);
  for (const auto& [m, r] : factors) {
    if (m < 1) throw std::invalid_argument("eta level multiplier must be positive");
    acc = acc * pow_int(euler_at_level(m, rel), r);
  }
  return acc.shifted(shift);
}

EtaQuotient hauptmodul_quotient() { return EtaQuotient{{{1, 12}, {3, -12}}}; }

LaurentSeries euler_kernel(Exponent precision) {
  if (precision < 1) throw std::invalid_argument("euler_kernel precision must be >= 1");
  auto c = kernels::pentagonal_kernel(static_cast<std::size_t>(precision));
  return LaurentSeries(kQ, 0, std::move(c), precision);
}

LaurentSeries hauptmodul_h(Exponent precision) { return hauptmodul_quotient().expand(precision); }

LaurentSeries discriminant_delta(Exponent precision) {
  return EtaQuotient{{{1, 24}}}.expand(precision);
}

LaurentSeries eisenstein_e4(Exponent precision) {
  if (precision < 1) throw std::invalid_argument("eisenstein_e4 precision must be >= 1");
  const auto sigma = kernels::sigma3_table(static_cast<std::size_t>(precision));
  std::vector<Rat> c(sigma.size());
  c[0] = 1;
  for (std::size_t n = 1; n < c.size(); ++n) c[n] = Rat(sigma[n] * 240);
  return LaurentSeries(kQ, 0, std::move(c), precision);
}

LaurentSeries j_expansion(Exponent precision) {
  const LaurentSeries e4 = eisenstein_e4(precision + 1);
  const LaurentSeries delta = discriminant_delta(precision + 2);
  return pow_int(e4, 3) * invert(delta);
}

VerificationReport check_j_h_identity(const LaurentSeries& h, const LaurentSeries& j,
                                      Exponent requested_through) {
  const LaurentSeries lhs = (h + Rat(27)) * pow_int(h + Rat(243), 3) * pow_int(invert(h), 3);
  return compare_series("j-h-identity", "j = (h+27)(h+243)^3/h^3 with j = E4^3/Delta", j, lhs,
                        requested_through);
}

VerificationReport verify_j_h_identity(Exponent precision) {
  if (precision < 1) throw std::invalid_argument("identity precision must be >= 1");
  return check_j_h_identity(hauptmodul_h(precision), j_expansion(precision), precision - 1);
}

LaurentSeries q_in_hinv(Exponent precision) {
  if (precision < 2) throw std::invalid_argument("q_in_hinv precision must be >= 2");
  const LaurentSeries w = invert(hauptmodul_h(precision - 2));
  return revert(w).with_variable("w");
}

PuiseuxSeries q_frac_power_in_h(unsigned m, Exponent precision) {
  const LaurentSeries q = q_in_hinv(precision);
  long d = 1;
  for (unsigned i = 0; i < m; ++i) d *= 3;
  const RootDecomposition root = frac_root(PuiseuxSeries::lift(q, 1), static_cast<unsigned long>(d));
  // constant is 1 and the monomial is w^(1/d)
  const LaurentSeries body = root.unit.rescaled(d).body().shifted(1);
  return {body, d};
}

}  // namespace modseries::modforms
