#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modseries/constant_root.hpp"
#include "modseries/laurent_series.hpp"

namespace modseries {

/// Laurent series in x^(1/d): body(y) with y = x^(1/d). Valuation and
/// precision of the body are measured in units of 1/d.
class PuiseuxSeries {
 public:
  PuiseuxSeries(LaurentSeries body, long ramification);

  /// Reinterprets the variable of `s` as x^(1/d).
  static PuiseuxSeries lift(const LaurentSeries& s, long d);

  const LaurentSeries& body() const { return body_; }
  long ramification() const { return ramification_; }
  const std::string& variable() const { return body_.variable(); }
  bool is_zero() const { return body_.is_zero(); }

  Rat valuation() const;
  Rat precision() const;
  /// Coefficient of x^exponent; zero off the 1/d lattice.
  Rat coefficient(const Rat& exponent) const;
  /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<Rat, Rat>> terms() const;

  /// Same series over x^(1/new_d); new_d must be a multiple of d.
  PuiseuxSeries rescaled(long new_d) const;
  /// Equal series with the smallest ramification that keeps every known
  /// coefficient and the precision exactly representable.
  PuiseuxSeries normalized() const;
  PuiseuxSeries scaled(const Rat& c) const { return {body_.scaled(c), ramification_}; }

  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) = default;

  std::string to_string() const;

 private:
  LaurentSeries body_;
  long ramification_;
};

enum class ArithOp { add, sub, mul, div };

/// Brings both operands to lcm(d_a, d_b) and delegates to the Laurent core.
PuiseuxSeries puiseux_arith(const PuiseuxSeries& a, const PuiseuxSeries& b, ArithOp op);

inline PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return puiseux_arith(a, b, ArithOp::add);
}
inline PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return puiseux_arith(a, b, ArithOp::sub);
}
inline PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return puiseux_arith(a, b, ArithOp::mul);
}
inline PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return puiseux_arith(a, b, ArithOp::div);
}

PuiseuxSeries pow_int(const PuiseuxSeries& p, long k);

/// Agreement of the coefficient maps on the commonly known exponent range.
bool agrees_with(const PuiseuxSeries& a, const PuiseuxSeries& b);

/// value = constant * x^monomial_exponent * unit, unit = 1 + O(x^(1/d)).
struct RootDecomposition {
  SymbolicConstantRoot constant;
  Rat monomial_exponent;
  PuiseuxSeries unit;

  /// constant^m * x^(m * exponent) * unit^m; requires constant^m rational.
  PuiseuxSeries power_back(long m) const;
};

/// Decomposes p^(1/m): the constant is rational when the leading coefficient
/// has an exact rational m-th root and a symbolic tag otherwise; the unit part
/// always has rational coefficients.
RootDecomposition frac_root(const PuiseuxSeries& p, unsigned long m);

/// Writes p (a series with rational coefficients) as factor * x^exponent * unit
/// with unit = 1 + O(x).
RootDecomposition unit_decomposition(const PuiseuxSeries& p);

/// A symbolic constant times a Puiseux series with rational coefficients.
struct ScaledPuiseux {
  SymbolicConstantRoot factor;
  PuiseuxSeries series;
};

/// Substitutes y = x^(1/d) -> scale * t^(target_exponent/d) in p, producing a
/// series in `new_variable`. Every surviving term must carry the same symbolic
/// factor, and target_exponent must be positive.
ScaledPuiseux substitute_monomial(const PuiseuxSeries& p, const SymbolicConstantRoot& scale,
                                  const Rat& target_exponent, std::string new_variable);

}  // namespace modseries
