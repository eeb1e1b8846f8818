#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "helmert/distributions.hpp"
#include "helmert/matrix.hpp"
#include "helmert/sampling.hpp"
#include "helmert/stat_tests.hpp"

using helmert::HelmertOrder;

namespace {

std::vector<double> ramp(std::int64_t n) {
  std::vector<double> z(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    z[static_cast<std::size_t>(i)] =
        static_cast<double>((i * 2654435761u) % 1000) / 499.5 - 1.0;
  }
  return z;
}

void bm_apply(benchmark::State& state) {
  const HelmertOrder order(state.range(0));
  const std::vector<double> z = ramp(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(helmert::apply(order, z));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_apply)->RangeMultiplier(4)->Range(64, 65536);

void bm_apply_transpose(benchmark::State& state) {
  const HelmertOrder order(state.range(0));
  const std::vector<double> y = ramp(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(helmert::apply_transpose(order, y));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_apply_transpose)->RangeMultiplier(4)->Range(64, 65536);

void bm_exact_certification(benchmark::State& state) {
  const HelmertOrder order(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(helmert::verify_orthogonality_exact(order));
  }
}
BENCHMARK(bm_exact_certification)->RangeMultiplier(2)->Range(64, 512);

void bm_standard_normal_batch(benchmark::State& state) {
  const std::int64_t trials = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        helmert::standard_normal_batch(helmert::Seed{42}, trials, 5));
  }
  state.SetItemsProcessed(state.iterations() * trials * 5);
}
BENCHMARK(bm_standard_normal_batch)->RangeMultiplier(4)->Range(1024, 65536);

void bm_ks_test(benchmark::State& state) {
  const helmert::SampleBatch batch =
      helmert::standard_normal_batch(helmert::Seed{7}, state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(helmert::ks_test(
        batch.values(), [](double x) { return helmert::normal_cdf(x); }));
  }
}
BENCHMARK(bm_ks_test)->RangeMultiplier(10)->Range(1000, 100000);

}  // namespace

BENCHMARK_MAIN();
