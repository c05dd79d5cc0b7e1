#include <benchmark/benchmark.h>

#include "hcube/subset_spec.hpp"
#include "hcube/uncertainty.hpp"

namespace {

void BM_BallAngleSvd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = hcube::ball_subset(n / 3);
  const auto sigma = hcube::ball_subset(n / 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(hcube::cos_angle(s, sigma, n).cos_angle);
}
BENCHMARK(BM_BallAngleSvd)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BallEigen(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hcube::ball_eigen(n, n / 4).lambda);
}
BENCHMARK(BM_BallEigen)->Arg(100)->Arg(200)->Arg(400);

}  // namespace
