#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modseries/laurent_series.hpp"
#include "modseries/puiseux.hpp"

namespace modseries {

/// Wire form of a (Puiseux) series:
///   {"variable": str, "ramification": int, "valuation": int, "precision": int,
///    "coefficients": [[exponent_str, rational_str], ...]}
/// valuation and precision count units of 1/ramification. Only nonzero
/// coefficients are listed, in strictly increasing exponent order; numbers are
/// canonical rational strings.
struct SeriesDocument {
  std::string variable;
  long ramification = 1;
  Exponent valuation = 0;
  Exponent precision = 0;
  std::vector<std::pair<std::string, std::string>> coefficients;

  static SeriesDocument from_series(const PuiseuxSeries& s);
  static SeriesDocument from_series(const LaurentSeries& s) {
    return from_series(PuiseuxSeries::lift(s, 1));
  }
  PuiseuxSeries to_series() const;

  std::string to_json() const;
  /// Strict parser: rejects missing fields, non-canonical numbers, zero or
  /// out-of-order coefficients and exponents off the 1/ramification lattice.
  static SeriesDocument parse_json(std::string_view text);

  friend bool operator==(const SeriesDocument&, const SeriesDocument&) = default;
};

}  // namespace modseries
