#pragma once

#include <optional>
#include <string>

#include "modseries/rat.hpp"

namespace modseries {

/// The constant base^(1/root_index), kept symbolic when it is not rational.
///
/// These are the constants that live in the field generated by 3-power roots
/// over Q. Only their multiplicative bookkeeping is modelled: powers and
/// products reduce to a Rat whenever the exponent arithmetic allows it. For
/// even root indices of negative bases the tag names an unspecified root.
class SymbolicConstantRoot {
 public:
  SymbolicConstantRoot(Rat base = Rat(1), unsigned long root_index = 1);
  static SymbolicConstantRoot rational(const Rat& value) { return {value, 1}; }

  const Rat& base() const { return base_; }
  unsigned long root_index() const { return root_index_; }

  /// Rational value when base^(1/root_index) is rational.
  std::optional<Rat> rational_value() const;
  bool is_rational() const { return rational_value().has_value(); }

  /// base^(k/root_index), reduced by gcd(k, root_index) and collapsed to a
  /// rational when exact.
  SymbolicConstantRoot pow(long k) const;

  /// root_index-th power reconstructs the base exactly.
  Rat power_back() const { return base_; }

  /// "(-1/27)^(1/9)" or "-1/3".
  std::string to_string() const;

  friend SymbolicConstantRoot operator*(const SymbolicConstantRoot& a,
                                        const SymbolicConstantRoot& b);

  /// Equality of the represented values: a^(1/m) == b^(1/n) iff
  /// a^(l/m) == b^(l/n) with l = lcm(m, n).
  friend bool operator==(const SymbolicConstantRoot& a, const SymbolicConstantRoot& b);

 private:
  Rat base_;
  unsigned long root_index_;
};

}  // namespace modseries
