#pragma once

#include <optional>
#include <string>

#include "modseries/polynomial.hpp"

namespace modseries {

/// A point of P^1(Q): a rational number or infinity.
class ProjectivePoint {
 public:
  ProjectivePoint(const Rat& value) : value_(value) {}  // NOLINT
  ProjectivePoint(long value) : value_(Rat(value)) {}    // NOLINT
  static ProjectivePoint infinity() { return ProjectivePoint(); }

  bool is_infinite() const { return !value_.has_value(); }
  const Rat& value() const;
  std::string to_string() const { return value_ ? value_->get_str() : "inf"; }
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) = default;

 private:
  ProjectivePoint() = default;
  std::optional<Rat> value_;
};

/// numerator / denominator over Q in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction(Polynomial numerator, Polynomial denominator = Polynomial::constant(Rat(1)));
  RationalFunction(const Rat& c) : RationalFunction(Polynomial::constant(c)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Polynomial::constant(Rat(c))) {}   // NOLINT

  const Polynomial& numerator() const { return numerator_; }
  const Polynomial& denominator() const { return denominator_; }
  /// Degree of the map P^1 -> P^1.
  long degree() const;
  bool is_constant() const { return degree() == 0; }

  ProjectivePoint evaluate(const ProjectivePoint& x) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const { return {-numerator_, denominator_}; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  std::string to_string(const std::string& variable = "x") const;

 private:
  Polynomial numerator_;
  Polynomial denominator_;
};

/// Laurent expansion at x = 0 in `variable`, known mod variable^precision.
LaurentSeries to_laurent(const RationalFunction& f, const std::string& variable,
                         Exponent precision);

}  // namespace modseries
