#include "modseries/rational_function.hpp"

#include <stdexcept>

namespace modseries {

const Rat& ProjectivePoint::value() const {
  if (!value_) throw std::domain_error("the point at infinity has no rational value");
  return *value_;
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator) {
  if (denominator.is_zero()) throw std::domain_error("rational function with zero denominator");
  const Polynomial g = gcd(numerator, denominator);
  if (numerator.is_zero()) {
    numerator_ = {};
    denominator_ = Polynomial::constant(Rat(1));
    return;
  }
  numerator = divmod(numerator, g).first;
  denominator = divmod(denominator, g).first;
  const Rat lead = denominator.leading_coefficient();
  numerator_ = (Rat(1) / lead) * numerator;
  denominator_ = denominator.monic();
}

long RationalFunction::degree() const {
  return std::max(numerator_.degree(), denominator_.degree());
}

ProjectivePoint RationalFunction::evaluate(const ProjectivePoint& x) const {
  if (x.is_infinite()) {
    const long dn = numerator_.degree();
    const long dd = denominator_.degree();
    if (dn > dd) return ProjectivePoint::infinity();
    if (dn < dd) return Rat(0);
    return Rat(numerator_.leading_coefficient() / denominator_.leading_coefficient());
  }
  const Rat den = denominator_.evaluate(x.value());
  if (den == 0) return ProjectivePoint::infinity();
  return Rat(numerator_.evaluate(x.value()) / den);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
          a.denominator_ * b.denominator_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.numerator_ * b.numerator_, a.denominator_ * b.denominator_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.numerator_.is_zero()) throw std::domain_error("division by the zero rational function");
  return {a.numerator_ * b.denominator_, a.denominator_ * b.numerator_};
}

std::string RationalFunction::to_string(const std::string& variable) const {
  if (denominator_.degree() == 0) return numerator_.to_string(variable);
  return "(" + numerator_.to_string(variable) + ") / (" + denominator_.to_string(variable) + ")";
}

LaurentSeries to_laurent(const RationalFunction& f, const std::string& variable,
                         Exponent precision) {
  if (f.numerator().is_zero()) return LaurentSeries::zero(variable, precision);
  // den = x^a * (unit); 1/den is known mod x^(P_den - 2a)
  Exponent a = 0;
  while (f.denominator().coefficient(static_cast<long>(a)) == 0) ++a;
  const LaurentSeries inv = invert(to_laurent(f.denominator(), variable, precision + 2 * a));
  const LaurentSeries num = to_laurent(f.numerator(), variable, precision + a);
  LaurentSeries out = num * inv;
  return out.precision() > precision ? out.truncated(precision) : out;
}

}  // namespace modseries
