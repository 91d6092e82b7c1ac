#include <benchmark/benchmark.h>

#include "semicurve/semicurve.hpp"

namespace {

using namespace semicurve;

void BM_EnumerateSemigroups(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t n = 0;
    for_each_semigroup(g, [&](const NumericalSemigroup&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateSemigroups)->DenseRange(8, 14, 2);

void BM_Quotient(benchmark::State& state) {
  const auto s = NumericalSemigroup::from_generators({7, 11, 13});
  const auto e = RelativeIdeal::from_generators(s, {0, 3, 5});
  const auto f = RelativeIdeal::from_generators(s, {-4, 2});
  for (auto _ : state) benchmark::DoNotOptimize(quotient(e, f));
}
BENCHMARK(BM_Quotient);

void BM_NormalizedIdeals(benchmark::State& state) {
  const auto s = NumericalSemigroup::from_generators({5, 7, 9});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_normalized_ideals(s));
}
BENCHMARK(BM_NormalizedIdeals);

void BM_NormalizationChain(benchmark::State& state) {
  const auto s = NumericalSemigroup::from_generators({9, 10, 11, 13});
  for (auto _ : state) benchmark::DoNotOptimize(normalization_chain(s));
}
BENCHMARK(BM_NormalizationChain);

void BM_Oversemigroups(benchmark::State& state) {
  const auto s = NumericalSemigroup::from_generators({6, 7, 8, 17});
  for (auto _ : state) benchmark::DoNotOptimize(oversemigroups(s));
}
BENCHMARK(BM_Oversemigroups);

void BM_ClassifyUniverse(benchmark::State& state) {
  const auto u = enumerate_semigroups(8);
  for (auto _ : state) {
    for (const auto& s : u) benchmark::DoNotOptimize(classify(s));
  }
}
BENCHMARK(BM_ClassifyUniverse);

}  // namespace

BENCHMARK_MAIN();
