#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// binary. Each returns the number of failing cases.

#include <random>

#include "support.hpp"

namespace modseries::testing {

inline int ring_axiom_failures(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    const auto a = random_series(rng, -3, 3, kMaxPropertyPrecision);
    const auto b = random_series(rng, -3, 3, kMaxPropertyPrecision);
    const auto c = random_series(rng, -3, 3, kMaxPropertyPrecision);
    const auto one = a * invert(a);
    const bool ok = a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) &&
                    (a * b) * c == a * (b * c) && agrees_with(a * (b + c), a * b + a * c) &&
                    (a - a).is_zero() &&
                    a * LaurentSeries::constant("x", Rat(1), a.precision() - a.valuation()) == a &&
                    agrees_with(one, LaurentSeries::constant("x", Rat(1), one.precision())) &&
                    one.precision() == a.precision() - a.valuation();
    failures += ok ? 0 : 1;
  }
  return failures;
}

inline int reversion_failures(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Exponent> prec(2, kMaxPropertyPrecision);
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    const Exponent p = prec(rng);
    std::vector<Rat> c(static_cast<std::size_t>(p - 1));
    c[0] = 1;
    for (std::size_t k = 1; k < c.size(); ++k) c[k] = small_rat(rng);
    const LaurentSeries s("x", 1, c, p);
    const auto r = revert(s);
    const auto x = LaurentSeries::variable_series("x", p);
    const bool ok = r.precision() == p && compose(s, r) == x && compose(r, s) == x;
    failures += ok ? 0 : 1;
  }
  return failures;
}

inline int unit_root_failures(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Exponent> prec(1, kMaxPropertyPrecision);
  const unsigned long roots[] = {2, 3, 9, 27};
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    const auto s = random_unit(rng, prec(rng));
    const unsigned long m = roots[i % 4];
    const auto t = unit_root(s, m);
    const bool ok = t.precision() == s.precision() && pow_int(t, static_cast<long>(m)) == s;
    failures += ok ? 0 : 1;
  }
  return failures;
}

inline int frac_root_failures(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  const long ramifications[] = {1, 2, 3};
  const unsigned long roots[] = {2, 3, 9};
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    const long d = ramifications[i % 3];
    const unsigned long m = roots[(i / 3) % 3];
    const PuiseuxSeries p(random_series(rng, -4, 4, kMaxPropertyPrecision, "x"), d);
    const RootDecomposition dec = frac_root(p, m);
    const PuiseuxSeries back = dec.power_back(static_cast<long>(m));
    const bool ok = dec.unit.body().valuation() == 0 && dec.unit.body().leading_coefficient() == 1 &&
                    agrees_with(back, p) && back.precision() == p.precision() &&
                    dec.monomial_exponent * static_cast<long>(m) == p.valuation();
    failures += ok ? 0 : 1;
  }
  return failures;
}

}  // namespace modseries::testing
