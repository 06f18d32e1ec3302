#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "modseries/rat.hpp"

namespace modseries {

/// Raised when an operation would need a coefficient beyond the known
/// precision, or when a requested precision cannot be honoured.
class PrecisionError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised when two series in different variables are combined.
class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Truncated Laurent series sum_{k=v}^{P-1} c_k x^k + O(x^P) with exact
/// rational coefficients.
///
/// The value is normalized on construction: when nonzero, the coefficient at
/// the valuation is nonzero. A series with no nonzero known coefficient is the
/// zero series O(x^P); it has valuation P and an empty coefficient list.
/// Coefficients at or beyond the precision are unknown and reading them throws.
class LaurentSeries {
 public:
  /// `coefficients[i]` is the coefficient of x^(valuation + i); the list must
  /// have exactly precision - valuation entries.
  LaurentSeries(std::string variable, Exponent valuation, std::vector<Rat> coefficients,
                Exponent precision);

  static LaurentSeries zero(std::string variable, Exponent precision);
  static LaurentSeries constant(std::string variable, const Rat& value, Exponent precision);
  static LaurentSeries monomial(std::string variable, const Rat& coefficient,
                                Exponent exponent, Exponent precision);
  /// The series x itself, known mod x^precision.
  static LaurentSeries variable_series(std::string variable, Exponent precision);
  /// Polynomial sum_i coefficients[i] x^(first_exponent + i), truncated to
  /// the given precision.
  static LaurentSeries from_polynomial(std::string variable, std::span<const Rat> coefficients,
                                       Exponent precision, Exponent first_exponent = 0);

  const std::string& variable() const { return variable_; }
  Exponent valuation() const { return valuation_; }
  Exponent precision() const { return precision_; }
  bool is_zero() const { return coefficients_.empty(); }
  std::span<const Rat> coefficients() const { return coefficients_; }

  /// Coefficient of x^k: zero below the valuation, throws PrecisionError at or
  /// beyond the precision.
  Rat coefficient(Exponent k) const;
  const Rat& leading_coefficient() const;

  /// Forgets every coefficient at index >= precision. The new precision may
  /// not exceed the current one.
  LaurentSeries truncated(Exponent precision) const;
  /// Multiplication by x^k.
  LaurentSeries shifted(Exponent k) const;
  /// Substitution x -> x^factor for factor >= 1.
  LaurentSeries expanded(Exponent factor) const;
  LaurentSeries with_variable(std::string variable) const;
  LaurentSeries scaled(const Rat& factor) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

  // Exact rational constants; the precision of the series is kept.
  friend LaurentSeries operator+(const LaurentSeries& a, const Rat& c);
  friend LaurentSeries operator+(const Rat& c, const LaurentSeries& a) { return a + c; }
  friend LaurentSeries operator-(const LaurentSeries& a, const Rat& c) { return a + Rat(-c); }
  friend LaurentSeries operator-(const Rat& c, const LaurentSeries& a) { return (-a) + c; }
  friend LaurentSeries operator*(const LaurentSeries& a, const Rat& c) { return a.scaled(c); }
  friend LaurentSeries operator*(const Rat& c, const LaurentSeries& a) { return a.scaled(c); }

  /// Structural equality: variable, valuation, precision and coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

  /// Human-readable rendering, e.g. "q^-1 - 12 + 54*q + O(q^2)".
  std::string to_string() const;

 private:
  void normalize();

  std::string variable_;
  Exponent valuation_;
  std::vector<Rat> coefficients_;
  Exponent precision_;
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

/// Multiplicative inverse; the result is known mod x^(P - 2v).
LaurentSeries invert(const LaurentSeries& s);

/// outer(inner) for inner of valuation >= 1. Negative powers in `outer` go
/// through invert(inner). The result precision is the provable one, lowered
/// further to `cap` when given.
LaurentSeries compose(const LaurentSeries& outer, const LaurentSeries& inner,
                      std::optional<Exponent> cap = std::nullopt);

/// Compositional inverse of s = x + O(x^2) by Lagrange inversion:
/// [x^n] revert(s) = (1/n) [x^(n-1)] (x/s)^n. Callers must pre-scale to a
/// monic valuation-1 series.
LaurentSeries revert(const LaurentSeries& s);

/// s^k by repeated squaring; k < 0 inverts first.
LaurentSeries pow_int(const LaurentSeries& s, long k);

/// The unique t = 1 + O(x) with t^m = s, for s = 1 + O(x).
LaurentSeries unit_root(const LaurentSeries& s, unsigned long m);

/// Lowest exponent below min(P_a, P_b) where the two series differ.
std::optional<Exponent> first_mismatch(const LaurentSeries& a, const LaurentSeries& b);

/// True when both series agree on every commonly known coefficient.
inline bool agrees_with(const LaurentSeries& a, const LaurentSeries& b) {
  return !first_mismatch(a, b).has_value();
}

}  // namespace modseries
