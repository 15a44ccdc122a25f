#include <benchmark/benchmark.h>

#include "echcap/capacities.hpp"
#include "echcap/toric.hpp"

using namespace echcap;

static void BM_EllipsoidSequence(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ellipsoid_capacities(Rational(1), Rational(7, 3), state.range(0)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EllipsoidSequence)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

static void BM_PolydiskSequence(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(polydisk_capacities(Rational(2), Rational(3, 2), state.range(0)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolydiskSequence)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

static void BM_UnionConvolution(benchmark::State& state) {
  const auto k = state.range(0);
  std::vector<CapacitySequence> parts = {ball_capacities(1, k), ball_capacities(Rational(1, 2), k),
                                         ellipsoid_capacities(1, 2, k)};
  for (auto _ : state) benchmark::DoNotOptimize(disjoint_union_capacities(parts, k));
  state.SetComplexityN(k);
}
BENCHMARK(BM_UnionConvolution)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_ToricEuclidean(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(toric_capacity(Norm::euclidean(), state.range(0)));
}
BENCHMARK(BM_ToricEuclidean)->DenseRange(5, 25, 5)->Unit(benchmark::kMillisecond);

static void BM_ToricWeightedL1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(toric_capacity(Norm::weighted_l1(Rational(3, 2), 1), state.range(0)));
  }
}
BENCHMARK(BM_ToricWeightedL1)->DenseRange(10, 30, 10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
