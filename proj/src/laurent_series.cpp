#include "modseries/laurent_series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "modseries/kernels.hpp"

namespace modseries {

namespace {

void require_same_variable(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.variable() != b.variable())
    throw VariableMismatch("series in '" + a.variable() + "' combined with series in '" +
                           b.variable() + "'");
}

std::size_t to_size(Exponent n) { return n <= 0 ? 0 : static_cast<std::size_t>(n); }

// Power series inverse of a unit (u[0] != 0), Newton iteration t <- t(2 - u t)
// with the convolution kernel doing the heavy lifting.
std::vector<Rat> unit_inverse(std::span<const Rat> u, std::size_t n) {
  std::vector<Rat> t{Rat(1) / u[0]};
  std::size_t known = 1;
  while (known < n) {
    const std::size_t next = std::min(2 * known, n);
    auto ut = kernels::convolve(u.subspan(0, std::min(next, u.size())), t, next);
    // e = 1 - u t, zero below `known`
    for (auto& c : ut) c = -c;
    ut[0] += 1;
    std::span<const Rat> err(ut);
    auto corr = kernels::convolve(t, err, next);
    t.resize(next);
    for (std::size_t k = known; k < next; ++k) t[k] += corr[k];
    known = next;
  }
  return t;
}

}  // namespace

LaurentSeries::LaurentSeries(std::string variable, Exponent valuation,
                             std::vector<Rat> coefficients, Exponent precision)
    : variable_(std::move(variable)),
      valuation_(valuation),
      coefficients_(std::move(coefficients)),
      precision_(precision) {
  if (precision_ < valuation_ ||
      static_cast<Exponent>(coefficients_.size()) != precision_ - valuation_)
    throw std::invalid_argument("coefficient list length must equal precision - valuation");
  normalize();
}

void LaurentSeries::normalize() {
  auto first = std::find_if(coefficients_.begin(), coefficients_.end(),
                            [](const Rat& c) { return c != 0; });
  if (first == coefficients_.end()) {
    coefficients_.clear();
    valuation_ = precision_;
    return;
  }
  valuation_ += first - coefficients_.begin();
  coefficients_.erase(coefficients_.begin(), first);
}

LaurentSeries LaurentSeries::zero(std::string variable, Exponent precision) {
  return LaurentSeries(std::move(variable), precision, {}, precision);
}

LaurentSeries LaurentSeries::constant(std::string variable, const Rat& value,
                                      Exponent precision) {
  return monomial(std::move(variable), value, 0, precision);
}

LaurentSeries LaurentSeries::monomial(std::string variable, const Rat& coefficient,
                                      Exponent exponent, Exponent precision) {
  if (exponent >= precision || coefficient == 0) return zero(std::move(variable), precision);
  std::vector<Rat> c(to_size(precision - exponent));
  c[0] = coefficient;
  return LaurentSeries(std::move(variable), exponent, std::move(c), precision);
}

LaurentSeries LaurentSeries::variable_series(std::string variable, Exponent precision) {
  return monomial(std::move(variable), Rat(1), 1, precision);
}

LaurentSeries LaurentSeries::from_polynomial(std::string variable,
                                             std::span<const Rat> coefficients,
                                             Exponent precision, Exponent first_exponent) {
  if (precision <= first_exponent) return zero(std::move(variable), precision);
  std::vector<Rat> c(to_size(precision - first_exponent));
  for (std::size_t i = 0; i < coefficients.size() && i < c.size(); ++i) c[i] = coefficients[i];
  return LaurentSeries(std::move(variable), first_exponent, std::move(c), precision);
}

Rat LaurentSeries::coefficient(Exponent k) const {
  if (k >= precision_)
    throw PrecisionError("coefficient of " + variable_ + "^" + std::to_string(k) +
                         " requested from a series known mod " + variable_ + "^" +
                         std::to_string(precision_));
  if (k < valuation_) return Rat(0);
  return coefficients_[static_cast<std::size_t>(k - valuation_)];
}

const Rat& LaurentSeries::leading_coefficient() const {
  if (is_zero()) throw std::domain_error("zero series has no leading coefficient");
  return coefficients_.front();
}

LaurentSeries LaurentSeries::truncated(Exponent precision) const {
  if (precision > precision_)
    throw PrecisionError("cannot raise precision from " + std::to_string(precision_) + " to " +
                         std::to_string(precision));
  if (precision <= valuation_) return zero(variable_, precision);
  std::vector<Rat> c(coefficients_.begin(),
                     coefficients_.begin() + static_cast<std::ptrdiff_t>(precision - valuation_));
  return LaurentSeries(variable_, valuation_, std::move(c), precision);
}

LaurentSeries LaurentSeries::shifted(Exponent k) const {
  return LaurentSeries(variable_, valuation_ + k, coefficients_, precision_ + k);
}

LaurentSeries LaurentSeries::expanded(Exponent factor) const {
  if (factor < 1) throw std::invalid_argument("expansion factor must be >= 1");
  if (is_zero()) return zero(variable_, precision_ * factor);
  const Exponent v = valuation_ * factor;
  const Exponent p = precision_ * factor;
  std::vector<Rat> c(to_size(p - v));
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    c[i * static_cast<std::size_t>(factor)] = coefficients_[i];
  return LaurentSeries(variable_, v, std::move(c), p);
}

LaurentSeries LaurentSeries::with_variable(std::string variable) const {
  LaurentSeries out = *this;
  out.variable_ = std::move(variable);
  return out;
}

LaurentSeries LaurentSeries::scaled(const Rat& factor) const {
  if (factor == 0) return zero(variable_, precision_);
  std::vector<Rat> c(coefficients_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficients_[i] * factor;
  return LaurentSeries(variable_, valuation_, std::move(c), precision_);
}

LaurentSeries LaurentSeries::operator-() const { return scaled(Rat(-1)); }

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_variable(a, b);
  const Exponent p = std::min(a.precision(), b.precision());
  const Exponent v = std::min({a.valuation(), b.valuation(), p});
  std::vector<Rat> c(to_size(p - v));
  for (Exponent k = v; k < p; ++k) {
    auto& slot = c[static_cast<std::size_t>(k - v)];
    if (k >= a.valuation()) slot += a.coefficient(k);
    if (k >= b.valuation()) slot += b.coefficient(k);
  }
  return LaurentSeries(a.variable(), v, std::move(c), p);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return add(a, -b); }
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }
LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
  return mul(a, invert(b));
}

LaurentSeries operator+(const LaurentSeries& a, const Rat& c) {
  if (c == 0 || a.precision() <= 0) return a;
  const Exponent v = std::min<Exponent>(a.valuation(), 0);
  std::vector<Rat> coeffs(to_size(a.precision() - v));
  for (Exponent k = a.valuation(); k < a.precision(); ++k)
    coeffs[static_cast<std::size_t>(k - v)] = a.coefficient(k);
  coeffs[static_cast<std::size_t>(-v)] += c;
  return LaurentSeries(a.variable(), v, std::move(coeffs), a.precision());
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_variable(a, b);
  const Exponent p = std::min(a.precision() + b.valuation(), b.precision() + a.valuation());
  if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(a.variable(), p);
  const Exponent v = a.valuation() + b.valuation();
  if (p <= v) return LaurentSeries::zero(a.variable(), p);
  auto c = kernels::convolve(a.coefficients(), b.coefficients(), to_size(p - v));
  return LaurentSeries(a.variable(), v, std::move(c), p);
}

LaurentSeries invert(const LaurentSeries& s) {
  if (s.is_zero()) throw std::domain_error("cannot invert the zero series");
  const Exponent v = s.valuation();
  const Exponent p = s.precision() - 2 * v;
  auto t = unit_inverse(s.coefficients(), s.coefficients().size());
  return LaurentSeries(s.variable(), -v, std::move(t), p);
}

LaurentSeries pow_int(const LaurentSeries& s, long k) {
  if (k < 0) {
    if (s.is_zero()) throw std::domain_error("negative power of the zero series");
    return pow_int(invert(s), -k);
  }
  if (k == 0) return LaurentSeries::constant(s.variable(), Rat(1), s.precision() - s.valuation());
  LaurentSeries result = s;
  LaurentSeries base = s;
  bool have = false;
  for (unsigned long e = static_cast<unsigned long>(k);; e >>= 1) {
    if (e & 1UL) {
      result = have ? mul(result, base) : base;
      have = true;
    }
    if (e <= 1) break;
    base = mul(base, base);
  }
  return result;
}

LaurentSeries unit_root(const LaurentSeries& s, unsigned long m) {
  if (m == 0) throw std::invalid_argument("root index must be positive");
  if (s.is_zero() || s.valuation() != 0 || s.leading_coefficient() != 1)
    throw std::domain_error("unit_root requires a series with constant term exactly 1");
  const auto src = s.coefficients();
  const std::size_t n = src.size();
  // J.C.P. Miller recurrence for t = s^(1/m):
  //   k m t_k = sum_{j=1..k} ((m+1) j - k m) s_j t_{k-j}
  std::vector<Rat> t(n);
  t[0] = 1;
  const long mm = static_cast<long>(m);
  Rat term;
  for (std::size_t k = 1; k < n; ++k) {
    Rat acc = 0;
    const long kk = static_cast<long>(k);
    for (std::size_t j = 1; j <= k; ++j) {
      if (src[j] == 0) continue;
      const long weight = (mm + 1) * static_cast<long>(j) - kk * mm;
      if (weight == 0) continue;
      term = src[j] * t[k - j];
      term *= weight;
      acc += term;
    }
    acc /= Rat(kk * mm);
    t[k] = std::move(acc);
  }
  return LaurentSeries(s.variable(), 0, std::move(t), s.precision());
}

LaurentSeries compose(const LaurentSeries& outer, const LaurentSeries& inner,
                      std::optional<Exponent> cap) {
  const Exponent vi = inner.valuation();
  if (vi < 1) throw std::domain_error("compose requires an inner series of valuation >= 1");
  const std::string& var = inner.variable();
  Exponent target = vi * outer.precision();
  if (cap) target = std::min(target, *cap);
  if (outer.is_zero()) return LaurentSeries::zero(var, target);

  const Exponent vo = outer.valuation();
  // outer = x^vo * poly(x); poly is evaluated by Horner at the precision that
  // survives the final multiplication by inner^vo.
  const Exponent poly_target = target - vi * vo;
  const auto a = outer.coefficients();
  const LaurentSeries x = inner.precision() > poly_target ? inner.truncated(poly_target) : inner;
  LaurentSeries r = LaurentSeries::constant(var, a.back(), poly_target);
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    r = mul(r, x);
    if (r.precision() > poly_target) r = r.truncated(poly_target);
    r = r + a[i];
  }
  if (vo != 0) r = mul(r, pow_int(inner, static_cast<long>(vo)));
  if (r.precision() > target) r = r.truncated(target);
  return r;
}

LaurentSeries revert(const LaurentSeries& s) {
  if (s.is_zero() || s.valuation() != 1 || s.leading_coefficient() != 1)
    throw std::domain_error("revert requires a series of the form x + O(x^2)");
  const Exponent p = s.precision();
  const std::size_t n = to_size(p - 1);  // (x/s) and its powers are known mod x^(p-1)
  const auto phi = unit_inverse(s.coefficients(), n);
  std::vector<Rat> g(n);
  std::vector<Rat> power = phi;
  for (std::size_t k = 1; k <= n; ++k) {
    g[k - 1] = power[k - 1] / Rat(static_cast<long>(k));
    if (k < n) power = kernels::convolve(power, phi, n);
  }
  return LaurentSeries(s.variable(), 1, std::move(g), p);
}

std::optional<Exponent> first_mismatch(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_variable(a, b);
  const Exponent p = std::min(a.precision(), b.precision());
  for (Exponent k = std::min(a.valuation(), b.valuation()); k < p; ++k) {
    if (a.coefficient(k) != b.coefficient(k)) return k;
  }
  return std::nullopt;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const Rat& c = coefficients_[i];
    if (c == 0) continue;
    const Exponent k = valuation_ + static_cast<Exponent>(i);
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (!unit) out << mag.get_str() << "*";
    out << variable_;
    if (k != 1) out << "^" << k;
  }
  if (!first) out << " + ";
  out << "O(" << variable_;
  if (precision_ != 1) out << "^" << precision_;
  out << ")";
  return out.str();
}

}  // namespace modseries
