#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modseries/laurent_series.hpp"
#include "modseries/rat.hpp"

namespace modseries {

/// Dense univariate polynomial over Q, coefficients from degree 0 upwards.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(const Rat& c) { return Polynomial(std::vector<Rat>{c}); }
  static Polynomial x() { return Polynomial{0, 1}; }
  /// (x - root)
  static Polynomial linear_root(const Rat& root) { return Polynomial(std::vector<Rat>{-root, Rat(1)}); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<Rat>& coefficients() const { return coefficients_; }
  Rat coefficient(long k) const;
  Rat leading_coefficient() const;

  Rat evaluate(const Rat& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rat& c, const Polynomial& a);
  Polynomial operator-() const { return Rat(-1) * *this; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Renders in `variable`, highest degree first: "x^2 - 486*x - 19683".
  std::string to_string(const std::string& variable = "x") const;

 private:
  void trim();
  std::vector<Rat> coefficients_;
};

/// Quotient and remainder of Euclidean division; throws on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, unsigned long k);

/// Yun's algorithm: monic square-free factors f_i with p = lc * prod f_i^i.
/// Returned as (factor, multiplicity) pairs, skipping trivial factors.
std::vector<std::pair<Polynomial, long>> square_free_decomposition(const Polynomial& p);

/// Distinct rational roots, found by the rational root test on the
/// integer-scaled polynomial.
std::vector<Rat> rational_roots(const Polynomial& p);

/// Res(a, b) = lc(a)^deg(b) * prod_{a(r)=0} b(r).
Rat resultant(const Polynomial& a, const Polynomial& b);

/// Unique polynomial of degree < n through n points with distinct abscissae.
Polynomial interpolate(const std::vector<std::pair<Rat, Rat>>& points);

/// Truncated Laurent expansion of the polynomial in `variable`.
LaurentSeries to_laurent(const Polynomial& p, const std::string& variable, Exponent precision);

}  // namespace modseries
