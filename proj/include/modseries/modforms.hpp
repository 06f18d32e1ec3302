#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "modseries/laurent_series.hpp"
#include "modseries/puiseux.hpp"
#include "modseries/report.hpp"

namespace modseries::modforms {

/// prod_i eta(m_i z)^(r_i). eta(z) = q^(1/24) prod (1 - q^n); the q^(m r/24)
/// prefactors are collected in net_q_exponent so that the series part is an
/// ordinary power series with constant term 1.
struct EtaQuotient {
  std::vector<std::pair<long, long>> factors;  // (level multiplier m, exponent r)

  Rat net_q_exponent() const;
  /// q^net * prod E(q^m)^r mod q^precision. Requires an integral net exponent.
  LaurentSeries expand(Exponent precision) const;
};

/// (eta(z)/eta(3z))^12
EtaQuotient hauptmodul_quotient();

/// prod_{n>=1} (1 - q^n) mod q^precision via the pentagonal number theorem.
LaurentSeries euler_kernel(Exponent precision);

/// Hauptmodul of X0(3): h = q^-1 - 12 + 54q - 76q^2 + ..., known mod q^precision.
LaurentSeries hauptmodul_h(Exponent precision);

/// Delta = q prod (1 - q^n)^24.
LaurentSeries discriminant_delta(Exponent precision);

/// E4 = 1 + 240 sum sigma_3(n) q^n.
LaurentSeries eisenstein_e4(Exponent precision);

/// j = E4^3 / Delta, known mod q^precision.
LaurentSeries j_expansion(Exponent precision);

/// Compares (h+27)(h+243)^3/h^3 (built from `h`) against `j` on every commonly
/// known order.
VerificationReport check_j_h_identity(const LaurentSeries& h, const LaurentSeries& j,
                                      Exponent requested_through);

/// Computes h and j independently to absolute precision `precision` and
/// compares them through the identity.
VerificationReport verify_j_h_identity(Exponent precision);

/// q as a power series in w = 1/h, known mod w^precision.
LaurentSeries q_in_hinv(Exponent precision);

/// q^(1/3^m) = w^(1/3^m) * sum_i b_{i,m} w^i as a Puiseux series in w with
/// ramification 3^m; b_{i,m} is known for w^i with i < precision - 1.
PuiseuxSeries q_frac_power_in_h(unsigned m, Exponent precision);

}  // namespace modseries::modforms
