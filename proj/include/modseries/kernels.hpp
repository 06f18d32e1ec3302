#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "modseries/rat.hpp"

// Coefficient kernels shared by every series operation. Each parallel kernel
// has a serial reference kept for testing and benchmarking.
namespace modseries::kernels {

enum class Execution { serial, parallel };

/// Truncated Cauchy product over the integers:
/// out[k] = sum_{i+j=k} a[i] * b[j] for k < out_len.
std::vector<Int> convolve_int(std::span<const Int> a, std::span<const Int> b,
                              std::size_t out_len,
                              Execution policy = Execution::parallel);

/// Truncated Cauchy product over the rationals. Both operands are scaled to
/// integer vectors by their denominator lcm, convolved with convolve_int and
/// divided back.
std::vector<Rat> convolve(std::span<const Rat> a, std::span<const Rat> b,
                          std::size_t out_len,
                          Execution policy = Execution::parallel);

/// Straightforward rational Cauchy product, one mpq multiply-add per term.
std::vector<Rat> convolve_reference(std::span<const Rat> a,
                                    std::span<const Rat> b,
                                    std::size_t out_len);

/// Coefficients of prod_{n>=1} (1 - q^n) mod q^len from the pentagonal number
/// theorem. Touches O(sqrt(len)) nonzero entries.
std::vector<Rat> pentagonal_kernel(std::size_t len);

/// Reference for pentagonal_kernel: multiplies out the product directly.
std::vector<Rat> euler_product_reference(std::size_t len);

/// sum_{d | n} d^3 for n = 0 .. len-1 (entry 0 is 0), sieved in parallel.
std::vector<Int> sigma3_table(std::size_t len,
                              Execution policy = Execution::parallel);

}  // namespace modseries::kernels
