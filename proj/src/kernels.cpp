#include "modseries/kernels.hpp"

#include <algorithm>
#include <cstdint>

namespace modseries::kernels {

namespace {

// Below this output length the OpenMP fork costs more than the loop.
constexpr std::size_t kParallelThreshold = 48;

void convolve_range(std::span<const Int> a, std::span<const Int> b, std::vector<Int>& out,
                    std::int64_t k) {
  const std::int64_t na = static_cast<std::int64_t>(a.size());
  const std::int64_t nb = static_cast<std::int64_t>(b.size());
  const std::int64_t lo = std::max<std::int64_t>(0, k - nb + 1);
  const std::int64_t hi = std::min<std::int64_t>(k, na - 1);
  mpz_ptr acc = out[static_cast<std::size_t>(k)].get_mpz_t();
  for (std::int64_t i = lo; i <= hi; ++i) {
    mpz_srcptr x = a[static_cast<std::size_t>(i)].get_mpz_t();
    if (mpz_sgn(x) == 0) continue;
    mpz_srcptr y = b[static_cast<std::size_t>(k - i)].get_mpz_t();
    if (mpz_sgn(y) == 0) continue;
    mpz_addmul(acc, x, y);
  }
}

std::vector<Int> scale_to_integers(std::span<const Rat> values, const Int& common) {
  std::vector<Int> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].get_den() == 1) {
      out[i] = values[i].get_num() * common;
    } else {
      Int factor;
      mpz_divexact(factor.get_mpz_t(), common.get_mpz_t(), values[i].get_den_mpz_t());
      out[i] = values[i].get_num() * factor;
    }
  }
  return out;
}

}  // namespace

std::vector<Int> convolve_int(std::span<const Int> a, std::span<const Int> b,
                              std::size_t out_len, Execution policy) {
  std::vector<Int> out(out_len);
  if (a.empty() || b.empty()) return out;
  const std::int64_t n = static_cast<std::int64_t>(
      std::min(out_len, a.size() + b.size() - 1));
  if (policy == Execution::serial) {
    for (std::int64_t k = 0; k < n; ++k) convolve_range(a, b, out, k);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 4) if (out_len >= kParallelThreshold)
  for (std::int64_t k = 0; k < n; ++k) convolve_range(a, b, out, k);
  return out;
}

std::vector<Rat> convolve(std::span<const Rat> a, std::span<const Rat> b,
                          std::size_t out_len, Execution policy) {
  const Int da = denominator_lcm(a);
  const Int db = denominator_lcm(b);
  const auto ia = scale_to_integers(a, da);
  const auto ib = scale_to_integers(b, db);
  auto prod = convolve_int(ia, ib, out_len, policy);
  const Int den = da * db;
  std::vector<Rat> out(out_len);
  const std::int64_t n = static_cast<std::int64_t>(out_len);
  const bool integral = den == 1;
#pragma omp parallel for schedule(static) if (policy == Execution::parallel && out_len >= kParallelThreshold)
  for (std::int64_t k = 0; k < n; ++k) {
    auto idx = static_cast<std::size_t>(k);
    if (integral) {
      out[idx] = Rat(prod[idx]);
    } else {
      out[idx] = Rat(prod[idx], den);
      out[idx].canonicalize();
    }
  }
  return out;
}

std::vector<Rat> convolve_reference(std::span<const Rat> a, std::span<const Rat> b,
                                    std::size_t out_len) {
  std::vector<Rat> out(out_len);
  for (std::size_t i = 0; i < a.size() && i < out_len; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < out_len; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<Rat> pentagonal_kernel(std::size_t len) {
  std::vector<Rat> out(len);
  if (len == 0) return out;
  out[0] = 1;
  // Generalized pentagonal numbers k(3k-1)/2 for k = +-1, +-2, ... carry
  // sign (-1)^k.
  for (std::uint64_t k = 1;; ++k) {
    const std::uint64_t e1 = k * (3 * k - 1) / 2;
    const std::uint64_t e2 = k * (3 * k + 1) / 2;
    if (e1 >= len) break;
    const int sign = (k % 2 == 1) ? -1 : 1;
    out[e1] = sign;
    if (e2 < len) out[e2] = sign;
  }
  return out;
}

std::vector<Rat> euler_product_reference(std::size_t len) {
  std::vector<Rat> p(len);
  if (len == 0) return p;
  p[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    // p *= (1 - q^n), in place from the top
    for (std::size_t k = len; k-- > n;) p[k] -= p[k - n];
  }
  return p;
}

std::vector<Int> sigma3_table(std::size_t len, Execution policy) {
  std::vector<Int> out(len);
  const std::int64_t n = static_cast<std::int64_t>(len);
#pragma omp parallel for schedule(dynamic, 16) if (policy == Execution::parallel && len >= kParallelThreshold)
  for (std::int64_t m = 1; m < n; ++m) {
    Int s = 0;
    for (std::int64_t d = 1; d * d <= m; ++d) {
      if (m % d != 0) continue;
      Int d3 = d;
      d3 *= d * d;
      s += d3;
      const std::int64_t e = m / d;
      if (e != d) {
        Int e3 = e;
        e3 *= e;
        e3 *= e;
        s += e3;
      }
    }
    out[static_cast<std::size_t>(m)] = s;
  }
  return out;
}

}  // namespace modseries::kernels
