#pragma once

#include <stdexcept>

#include "modseries/laurent_series.hpp"
#include "modseries/rat.hpp"
#include "modseries/rational_function.hpp"

namespace modseries {

class SingularCurve : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a coefficient domain T
/// (Rat, RationalFunction or LaurentSeries).
template <class T>
struct WeierstrassCurve {
  T a1, a2, a3, a4, a6;
};

template <class T>
struct CurveInvariants {
  T b2, b4, b6, b8, c4, c6, disc, j;
};

namespace detail {

inline bool is_zero(const Rat& x) { return x == 0; }
inline bool is_zero(const LaurentSeries& x) { return x.is_zero(); }
inline bool is_zero(const RationalFunction& x) { return x.numerator().is_zero(); }

inline Rat divide(const Rat& a, const Rat& b) { return a / b; }
inline LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b) { return a / b; }
inline RationalFunction divide(const RationalFunction& a, const RationalFunction& b) {
  return a / b;
}

template <class T>
T times(const T& x, long c) {
  return T(x * Rat(c));
}

}  // namespace detail

/// Standard b/c invariants, discriminant and j. Throws SingularCurve when the
/// discriminant vanishes (for series: when no nonzero coefficient is known).
template <class T>
CurveInvariants<T> weierstrass_invariants(const WeierstrassCurve<T>& e) {
  using detail::times;
  const T& a1 = e.a1;
  const T& a2 = e.a2;
  const T& a3 = e.a3;
  const T& a4 = e.a4;
  const T& a6 = e.a6;
  CurveInvariants<T> inv{a1, a1, a1, a1, a1, a1, a1, a1};
  inv.b2 = T(a1 * a1 + times(a2, 4));
  inv.b4 = T(times(a4, 2) + a1 * a3);
  inv.b6 = T(a3 * a3 + times(a6, 4));
  inv.b8 = T(a1 * a1 * a6 + times(T(a2 * a6), 4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4);
  const T& b2 = inv.b2;
  const T& b4 = inv.b4;
  const T& b6 = inv.b6;
  const T& b8 = inv.b8;
  inv.c4 = T(b2 * b2 - times(b4, 24));
  inv.c6 = T(times(T(b2 * b4), 36) - b2 * b2 * b2 - times(b6, 216));
  inv.disc = T(times(T(b2 * b4 * b6), 9) - b2 * b2 * b8 - times(T(b4 * b4 * b4), 8) -
               times(T(b6 * b6), 27));
  if (detail::is_zero(inv.disc)) throw SingularCurve("curve has zero discriminant");
  inv.j = detail::divide(T(inv.c4 * inv.c4 * inv.c4), inv.disc);
  return inv;
}

}  // namespace modseries
