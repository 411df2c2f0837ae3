#include <benchmark/benchmark.h>

#include "hyperdyn/hyperspace.hpp"
#include "hyperdyn/properties.hpp"
#include "hyperdyn/systems.hpp"

using namespace hyperdyn;

static void BM_HausdorffTable(benchmark::State& state) {
  auto sys = builtin_product(builtin_cyclic_rotation(2), builtin_cyclic_rotation(3));
  // 6 points: a 63-element hyperspace with a full 63 x 63 Hausdorff table.
  for (auto _ : state) {
    auto hyper = build_hyperspace_system(sys);
    benchmark::DoNotOptimize(hyper.elements.data());
  }
}
BENCHMARK(BM_HausdorffTable);

static void BM_HausdorffPair(benchmark::State& state) {
  auto space = FiniteMetricSpace::line(12);
  SetMask a = 0b101010101010, b = 0b010101010101;
  for (auto _ : state) {
    auto d = hausdorff_distance(space, a, b);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_HausdorffPair);

static void BM_ImageGroupClosure(benchmark::State& state) {
  auto sys = builtin_commuting_pair(6);
  for (auto _ : state) {
    ImageGroup ig(sys);
    benchmark::DoNotOptimize(ig.size());
  }
}
BENCHMARK(BM_ImageGroupClosure);

static void BM_TransitivityCheck(benchmark::State& state) {
  auto hyper = build_hyperspace_system(
      builtin_product(builtin_cyclic_rotation(2), builtin_cyclic_rotation(3)));
  for (auto _ : state) {
    auto r = is_transitive(hyper.system);
    benchmark::DoNotOptimize(r.verdict);
  }
}
BENCHMARK(BM_TransitivityCheck);

static void BM_SftMixingCertificate(benchmark::State& state) {
  auto gm = builtin_golden_mean();
  Bounds b;
  for (auto _ : state) {
    auto r = sft_is_mixing(gm, b);
    benchmark::DoNotOptimize(r.verdict);
  }
}
BENCHMARK(BM_SftMixingCertificate);

BENCHMARK_MAIN();
