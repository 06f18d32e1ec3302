#include "modseries/rat.hpp"

#include <numeric>
#include <stdexcept>

namespace modseries {

Rat make_rat(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  Rat r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rat canon = r;
  canon.canonicalize();
  if (canon.get_str() != s)
    throw std::invalid_argument("non-canonical rational: '" + s + "'");
  return canon;
}

std::string to_string(const Rat& value) { return value.get_str(); }

namespace {

std::optional<Int> exact_int_root(const Int& value, unsigned long m) {
  if (value < 0 && m % 2 == 0) return std::nullopt;
  Int root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), m) == 0) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Rat> exact_root(const Rat& value, unsigned long m) {
  if (m == 0) throw std::invalid_argument("zeroth root");
  auto num = exact_int_root(value.get_num(), m);
  if (!num) return std::nullopt;
  auto den = exact_int_root(value.get_den(), m);
  if (!den) return std::nullopt;
  Rat r(*num, *den);
  r.canonicalize();
  return r;
}

Rat power(const Rat& value, long k) {
  if (k < 0) {
    if (value == 0) throw std::domain_error("negative power of zero");
    return power(Rat(1) / value, -k);
  }
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(out.get_den_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Int denominator_lcm(std::span<const Rat> values) {
  Int l = 1;
  for (const auto& v : values) {
    if (v.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

std::string exponent_string(Exponent numerator, Exponent denominator) {
  if (denominator <= 0) throw std::invalid_argument("non-positive exponent denominator");
  Exponent g = std::gcd(numerator, denominator);
  if (g == 0) g = 1;
  numerator /= g;
  denominator /= g;
  if (denominator == 1) return std::to_string(numerator);
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

}  // namespace modseries
