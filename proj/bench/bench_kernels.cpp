#include <benchmark/benchmark.h>

#include <vector>

#include "modseries/kernels.hpp"
#include "modseries/modforms.hpp"

using namespace modseries;
using namespace modseries::kernels;

namespace {

// Coefficients of j: integers that grow like exp(4 pi sqrt(n)).
std::vector<Rat> j_coefficients(std::size_t n) {
  const auto j = modforms::j_expansion(static_cast<Exponent>(n) - 1);
  return {j.coefficients().begin(), j.coefficients().end()};
}

// Rationals with mixed 3-power denominators, as in the Tate parameter.
std::vector<Rat> tate_like(std::size_t n) {
  std::vector<Rat> v(n);
  Int den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = Rat(Int(static_cast<long>(7 * i + 1)), den);
    v[i].canonicalize();
    den *= 3;
  }
  return v;
}

void run_convolve(benchmark::State& state, Execution policy, std::vector<Rat> (*make)(std::size_t)) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = make(n);
  const auto b = make(n);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(a, b, n, policy));
  state.SetComplexityN(state.range(0));
}

void BM_ConvolveJSerial(benchmark::State& s) { run_convolve(s, Execution::serial, j_coefficients); }
void BM_ConvolveJParallel(benchmark::State& s) { run_convolve(s, Execution::parallel, j_coefficients); }
void BM_ConvolveTateSerial(benchmark::State& s) { run_convolve(s, Execution::serial, tate_like); }
void BM_ConvolveTateParallel(benchmark::State& s) { run_convolve(s, Execution::parallel, tate_like); }

void BM_ConvolveReference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = tate_like(n);
  const auto b = tate_like(n);
  for (auto _ : state) benchmark::DoNotOptimize(convolve_reference(a, b, n));
}

void BM_Sigma3Serial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sigma3_table(static_cast<std::size_t>(state.range(0)), Execution::serial));
}

void BM_Sigma3Parallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sigma3_table(static_cast<std::size_t>(state.range(0)), Execution::parallel));
}

}  // namespace

BENCHMARK(BM_ConvolveJSerial)->RangeMultiplier(2)->Range(64, 512)->Complexity();
BENCHMARK(BM_ConvolveJParallel)->RangeMultiplier(2)->Range(64, 512)->Complexity();
BENCHMARK(BM_ConvolveTateSerial)->RangeMultiplier(2)->Range(64, 256)->Complexity();
BENCHMARK(BM_ConvolveTateParallel)->RangeMultiplier(2)->Range(64, 256)->Complexity();
BENCHMARK(BM_ConvolveReference)->RangeMultiplier(2)->Range(64, 256);
BENCHMARK(BM_Sigma3Serial)->Arg(1 << 14);
BENCHMARK(BM_Sigma3Parallel)->Arg(1 << 14);

BENCHMARK_MAIN();
