#include <benchmark/benchmark.h>

#include "hcube/cube_function.hpp"
#include "hcube/random.hpp"
#include "hcube/rng.hpp"

namespace {

void BM_Wht(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  hcube::Rng rng(1);
  const auto f = hcube::random_signed_function(rng, n);
  for (auto _ : state) {
    auto s = hcube::wht(f);
    benchmark::DoNotOptimize(s.coeffs.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Wht)->DenseRange(8, 20, 4);

void BM_Heat(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  hcube::Rng rng(2);
  const auto f = hcube::random_positive_function(rng, n);
  for (auto _ : state) {
    auto g = hcube::heat(f, 0.7);
    benchmark::DoNotOptimize(g.values.data());
  }
}
BENCHMARK(BM_Heat)->DenseRange(8, 16, 4);

void BM_Dirichlet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  hcube::Rng rng(3);
  const auto f = hcube::random_signed_function(rng, n);
  const auto g = hcube::random_signed_function(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(hcube::dirichlet(f, g));
}
BENCHMARK(BM_Dirichlet)->DenseRange(8, 16, 4);

}  // namespace

BENCHMARK_MAIN();
