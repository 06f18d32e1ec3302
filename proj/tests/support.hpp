#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "modseries/laurent_series.hpp"
#include "modseries/puiseux.hpp"

namespace modseries::testing {

inline LaurentSeries series(const std::string& var, Exponent valuation,
                            std::initializer_list<Rat> values, Exponent precision) {
  const std::vector<Rat> c(values);
  return LaurentSeries::from_polynomial(var, c, precision, valuation);
}

// Small rationals: mostly integers in [-4, 4], sometimes with denominator 2 or 3.
inline Rat small_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<int> kind(0, 5);
  const int k = kind(rng);
  const long d = k == 0 ? 2 : k == 1 ? 3 : 1;
  return make_rat(num(rng), d);
}

inline Rat nonzero_rat(std::mt19937_64& rng) {
  Rat r;
  do r = small_rat(rng);
  while (r == 0);
  return r;
}

/// Random series x^v (c0 + c1 x + ...) with c0 != 0 and absolute precision <= max_precision.
inline LaurentSeries random_series(std::mt19937_64& rng, Exponent min_v, Exponent max_v,
                                   Exponent max_precision, const std::string& var = "x") {
  std::uniform_int_distribution<Exponent> vd(min_v, max_v);
  const Exponent v = vd(rng);
  std::uniform_int_distribution<Exponent> pd(v + 1, std::max(v + 1, max_precision));
  const Exponent p = pd(rng);
  std::vector<Rat> c(static_cast<std::size_t>(p - v));
  c[0] = nonzero_rat(rng);
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = small_rat(rng);
  return {var, v, std::move(c), p};
}

/// 1 + O(x) with the given absolute precision.
inline LaurentSeries random_unit(std::mt19937_64& rng, Exponent precision,
                                 const std::string& var = "x") {
  std::vector<Rat> c(static_cast<std::size_t>(precision));
  c[0] = 1;
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = small_rat(rng);
  return {var, 0, std::move(c), precision};
}

inline constexpr int kPropertyCases = 1000;
inline constexpr Exponent kMaxPropertyPrecision = 64;

}  // namespace modseries::testing
