#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "modseries/constant_root.hpp"
#include "modseries/laurent_series.hpp"
#include "modseries/puiseux.hpp"
#include "modseries/report.hpp"
#include "modseries/weierstrass.hpp"

namespace modseries::tate {

using SeriesCurve = WeierstrassCurve<LaurentSeries>;
using SeriesInvariants = CurveInvariants<LaurentSeries>;

/// alpha = 3 (1 - pi)^(1/3), known mod pi^precision.
LaurentSeries deuring_alpha(Exponent precision);

/// y^2 + alpha xy + y = x^3 over Q((pi)), pi = 1/t.
SeriesCurve deuring_curve(Exponent precision);

/// The Deuring model with a1 = alpha as a rational-function variable.
WeierstrassCurve<RationalFunction> deuring_curve_symbolic();

/// -27 (1 - pi)(1 - 9 pi)^3 / pi, i.e. -27 (t-1)(t-9)^3 / t^3 at t = 1/pi.
LaurentSeries deuring_j_closed_form(Exponent precision);

/// j of deuring_curve(precision) against the closed form; j is known mod
/// pi^(precision - 2).
VerificationReport verify_deuring_j(Exponent precision);

/// Substituting alpha^3 = 27 (t - 1)/t into alpha^3 (alpha^3 - 24)^3 / (alpha^3 - 27)
/// gives -27 (t-1)(t-9)^3 / t^3 as rational functions of t.
bool deuring_j_rational_identity();

enum class Reduction { good, split_multiplicative, nonsplit_multiplicative, additive };

struct ReductionType {
  Reduction classification;
  Exponent disc_valuation;
  Exponent c4_valuation;
  std::optional<std::pair<Rat, Rat>> singular_point;  // of the reduced curve
  std::optional<Rat> tangent_cone_discriminant;
  std::optional<Rat> residue_field_witness;  // square class containing the discriminant
};

/// Classifies the reduction at the variable's place. `square_classes` lists
/// representatives d of the classes d * (Q^x)^2 that are squares in the
/// residue field (e.g. {1, -3} when it contains sqrt(-3)).
ReductionType reduction_type(const SeriesCurve& e, const std::vector<Rat>& square_classes);

std::string to_string(Reduction r);

/// q with j(q) = j_series: q as a series in 1/j (reversion of 1/j(q)) composed
/// with 1/j_series. The result is known mod x^min(precision, P_j - 2 v_j).
LaurentSeries tate_parameter(const LaurentSeries& j_series, Exponent precision);

/// q = c * x^v * u with u = 1 + O(x).
RootDecomposition unit_decomposition(const LaurentSeries& q_series);

/// eta^a q^(b/3^n) in the Tate uniformization, with the q-part decomposed.
struct TorsionParameter {
  long zeta_exponent;  // a mod 3^n; eta is an opaque primitive 3^n-th root of unity
  long q_exponent;     // b mod 3^n
  unsigned level;      // n
  SymbolicConstantRoot constant;
  Rat monomial_exponent;
  PuiseuxSeries unit;
};

struct TorsionCertificate {
  bool unit_constant_one = false;
  bool exponent_on_lattice = false;     // monomial exponent in (1/3^n) Z
  bool generator_power_back = false;    // unit(b=1)^(3^n) reproduces u
  bool constant_power_back = false;     // constant(b=1)^(3^n) = -1/27
  bool ok() const {
    return unit_constant_one && exponent_on_lattice && generator_power_back && constant_power_back;
  }
};

struct TorsionResult {
  LaurentSeries tate_q;
  RootDecomposition decomposition;  // q = -(1/27) pi u
  std::vector<TorsionParameter> parameters;
  TorsionCertificate certificate;
};

/// Representatives of A[3^n]: q^(b/3^n) for every b in Z/3^n (a = 0) and the
/// pure root of unity eta (a = 1, b = 0). Units carry `terms` coefficients.
TorsionResult torsion_parameters(unsigned n, Exponent terms);

struct LegendreResult {
  LaurentSeries lambda;
  SeriesCurve curve;
  SeriesInvariants invariants;
  LaurentSeries j_closed_form;  // 64 (4 - t^4)^3 / t^8
};

/// lambda = (1 + sqrt(1 - t^4))/2, known mod t^precision.
LaurentSeries legendre_lambda(Exponent precision);

/// y^2 = x(x-1)(x-lambda) over Q((t)). The discriminant has valuation 8, so
/// precision must exceed 8.
LegendreResult legendre_curve(Exponent precision);

}  // namespace modseries::tate
