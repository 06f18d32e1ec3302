#include <doctest.h>

#include <random>

#include "modseries/kernels.hpp"
#include "support.hpp"

using namespace modseries;
using namespace modseries::kernels;

TEST_CASE("parallel convolution matches the serial and mpq references") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> len(0, 150);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rat> a(len(rng)), b(len(rng));
    for (auto& x : a) x = testing::small_rat(rng);
    for (auto& x : b) x = testing::small_rat(rng);
    const std::size_t out = len(rng);
    const auto ref = convolve_reference(a, b, out);
    CHECK(convolve(a, b, out, Execution::serial) == ref);
    CHECK(convolve(a, b, out, Execution::parallel) == ref);
  }
}

TEST_CASE("integer convolution policies agree on large operands") {
  std::vector<Int> a(300), b(300);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = Int(1) << static_cast<unsigned>(i % 97);
    b[i] = Int(static_cast<long>(i)) - 150;
  }
  CHECK(convolve_int(a, b, 400, Execution::serial) == convolve_int(a, b, 400, Execution::parallel));
}

TEST_CASE("pentagonal kernel equals the direct Euler product") {
  for (std::size_t len : {0u, 1u, 2u, 3u, 10u, 57u, 200u})
    CHECK(pentagonal_kernel(len) == euler_product_reference(len));
  const auto e = pentagonal_kernel(8);
  CHECK(e == std::vector<Rat>{1, -1, -1, 0, 0, 1, 0, 1});
}

TEST_CASE("sigma3 table") {
  const auto s = sigma3_table(13);
  CHECK(s[0] == 0);
  CHECK(s[1] == 1);
  CHECK(s[2] == 9);
  CHECK(s[6] == 1 + 8 + 27 + 216);
  CHECK(s[12] == 1 + 8 + 27 + 64 + 216 + 1728);
  CHECK(sigma3_table(500, Execution::serial) == sigma3_table(500, Execution::parallel));
}
