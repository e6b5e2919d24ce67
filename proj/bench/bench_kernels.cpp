// Copyright 2026 The dephase Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>

#include <vector>

#include "dephase/ensembles.hpp"
#include "dephase/fidelity.hpp"
#include "dephase/histogram.hpp"
#include "dephase/oracle.hpp"
#include "dephase/serial_reference.hpp"
#include "dephase/states.hpp"

namespace {

using namespace dephase;

SuperposedState random_manifold_state(int n, int k) {
  return sample_state({EnsembleFamily::kRandomInManifold, n, k, 1, 7}, 0);
}

void BM_HistogramSerial(benchmark::State& st) {
  const auto s = random_manifold_state(static_cast<int>(st.range(0)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(serial::pair_histogram(s));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(s.size() * (s.size() - 1) / 2));
}
BENCHMARK(BM_HistogramSerial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_HistogramEnumerate(benchmark::State& st) {
  const auto s = random_manifold_state(static_cast<int>(st.range(0)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(pair_histogram(s, HistogramBackend::kEnumerate));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(s.size() * (s.size() - 1) / 2));
}
BENCHMARK(BM_HistogramEnumerate)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_FullSuperpositionSerial(benchmark::State& st) {
  const auto s = make_full_superposition(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::pair_histogram(s));
}
BENCHMARK(BM_FullSuperpositionSerial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_FullSuperpositionTransform(benchmark::State& st) {
  const auto s = make_full_superposition(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(pair_histogram(s, HistogramBackend::kTransform));
}
BENCHMARK(BM_FullSuperpositionTransform)
    ->Arg(8)->Arg(10)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_FidelitySerial(benchmark::State& st) {
  const auto s = make_w_generalized(14, 4);
  const auto times = linear_time_grid(1.0, static_cast<std::size_t>(st.range(0)));
  const std::vector<DecayKernel> kernels{{2.0, 1.0}, {2.0, 5.0}};
  for (auto _ : st) benchmark::DoNotOptimize(serial::fidelity_exact(s, times, kernels));
}
BENCHMARK(BM_FidelitySerial)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_FidelityParallel(benchmark::State& st) {
  const auto s = make_w_generalized(14, 4);
  const auto times = linear_time_grid(1.0, static_cast<std::size_t>(st.range(0)));
  const std::vector<DecayKernel> kernels{{2.0, 1.0}, {2.0, 5.0}};
  for (auto _ : st) benchmark::DoNotOptimize(fidelity_exact(s, times, kernels));
}
BENCHMARK(BM_FidelityParallel)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_MonteCarloFidelity(benchmark::State& st) {
  const auto s = make_w_generalized(8, 2);
  for (auto _ : st) {
    benchmark::DoNotOptimize(oracle::mc_fidelity(s, 0.3, static_cast<std::size_t>(st.range(0)), 1));
  }
}
BENCHMARK(BM_MonteCarloFidelity)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_DeviationStats(benchmark::State& st) {
  const EnsembleSpec spec{EnsembleFamily::kRandomInManifold, 20, 4, 100, 11};
  for (auto _ : st) benchmark::DoNotOptimize(deviation_stats(spec));
}
BENCHMARK(BM_DeviationStats)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
