#include "modseries/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modseries {

Polynomial::Polynomial(std::vector<Rat> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rat Polynomial::coefficient(long k) const {
  if (k < 0 || k > degree()) return Rat(0);
  return coefficients_[static_cast<std::size_t>(k)];
}

Rat Polynomial::leading_coefficient() const {
  return is_zero() ? Rat(0) : coefficients_.back();
}

Rat Polynomial::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rat> d(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k)
    d[k - 1] = coefficients_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return (Rat(1) / leading_coefficient()) * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rat> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rat& c, const Polynomial& a) {
  std::vector<Rat> out(a.coefficients_);
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Rat& c = coefficients_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << variable;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = a.coefficients();
  const long db = b.degree();
  const Rat lead_inv = Rat(1) / b.leading_coefficient();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (long k = a.degree(); k >= db; --k) {
    const Rat c = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = c;
    for (long i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(k - db + i)] -= c * b.coefficient(i);
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial pow(const Polynomial& p, unsigned long k) {
  Polynomial out = Polynomial::constant(Rat(1));
  for (unsigned long i = 0; i < k; ++i) out = out * p;
  return out;
}

std::vector<std::pair<Polynomial, long>> square_free_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, long>> out;
  if (p.degree() < 1) return out;
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  const Polynomial a0 = gcd(f, df);
  Polynomial b = divmod(f, a0).first;
  Polynomial c = divmod(df, a0).first;
  Polynomial d = c - b.derivative();
  for (long i = 1; b.degree() >= 1; ++i) {
    const Polynomial a = gcd(b, d);
    if (a.degree() >= 1) out.emplace_back(a, i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

namespace {

std::vector<Int> positive_divisors(Int n) {
  n = abs(n);
  std::vector<std::pair<Int, unsigned>> primes;
  Int m = n;
  for (Int p = 2; p * p <= m; ++p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) primes.emplace_back(p, e);
  }
  if (m > 1) primes.emplace_back(m, 1);
  std::vector<Int> divs{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = divs.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rat> rational_roots(const Polynomial& p) {
  std::vector<Rat> roots;
  if (p.degree() < 1) return roots;
  // strip the factor x^k
  std::vector<Rat> c = p.coefficients();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  const Polynomial q(std::vector<Rat>(c.begin() + static_cast<std::ptrdiff_t>(low), c.end()));
  if (q.degree() < 1) return roots;
  const Int den = denominator_lcm(q.coefficients());
  const Int a0 = Rat(q.coefficient(0) * den).get_num();
  const Int an = Rat(q.leading_coefficient() * den).get_num();
  const auto nums = positive_divisors(a0);
  const auto dens = positive_divisors(an);
  for (const auto& u : nums) {
    for (const auto& v : dens) {
      for (int sign : {1, -1}) {
        Rat r(u * sign, v);
        r.canonicalize();
        if (q.evaluate(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Rat resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Rat(0);
  const long m = a.degree();
  const long n = b.degree();
  if (m == 0) return power(a.leading_coefficient(), n);
  if (n == 0) return power(b.leading_coefficient(), m);
  const Rat sign = (m * n) % 2 == 0 ? Rat(1) : Rat(-1);
  if (m < n) return sign * resultant(b, a);
  const Polynomial r = divmod(a, b).second;
  if (r.is_zero()) return Rat(0);
  return sign * power(b.leading_coefficient(), m - r.degree()) * resultant(b, r);
}

Polynomial interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  const std::size_t n = points.size();
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rat span = points[i].first - points[i - level].first;
      if (span == 0) throw std::invalid_argument("interpolation abscissae must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / span;
    }
  }
  Polynomial out;
  for (std::size_t i = n; i-- > 0;) {
    out = out * Polynomial::linear_root(points[i].first) + Polynomial::constant(dd[i]);
  }
  return out;
}

LaurentSeries to_laurent(const Polynomial& p, const std::string& variable, Exponent precision) {
  return LaurentSeries::from_polynomial(variable, p.coefficients(), precision);
}

}  // namespace modseries
