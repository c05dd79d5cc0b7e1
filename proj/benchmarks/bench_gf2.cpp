#include <benchmark/benchmark.h>

#include "hcube/coding.hpp"
#include "hcube/gf2.hpp"
#include "hcube/random.hpp"
#include "hcube/rng.hpp"

namespace {

void BM_DrTable(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  hcube::Rng rng(4);
  const auto m = hcube::random_gf2_matrix(rng, k, 2 * k, true);
  for (auto _ : state) benchmark::DoNotOptimize(hcube::d_r_table(m));
}
BENCHMARK(BM_DrTable)->Arg(12)->Arg(16)->Arg(20);

void BM_Rref(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  hcube::Rng rng(5);
  const auto m = hcube::random_gf2_matrix(rng, k, 2 * k, false);
  for (auto _ : state) benchmark::DoNotOptimize(hcube::rref(m).pivots.size());
}
BENCHMARK(BM_Rref)->Arg(64)->Arg(256);

void BM_Nullspace(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  hcube::Rng rng(6);
  const auto m = hcube::random_gf2_matrix(rng, k, 2 * k, false);
  for (auto _ : state) benchmark::DoNotOptimize(hcube::nullspace(m).rows());
}
BENCHMARK(BM_Nullspace)->Arg(64)->Arg(256);

}  // namespace
