// Serial reference grid vs. OpenMP grid on the figure-sized states.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "npwigner/fock.hpp"
#include "npwigner/marginals.hpp"
#include "npwigner/wigner.hpp"

namespace {

npw::DensityMatrix coherent(int cutoff) {
  return npw::density_from_pure(npw::make_coherent_state({4.0, 0.0}, cutoff));
}

void BM_GridSerial(benchmark::State& state) {
  const auto rho = coherent(static_cast<int>(state.range(0)));
  const int samples = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto grid = npw::wigner_grid_serial(rho, rho.cutoff(), samples);
    benchmark::DoNotOptimize(grid.values.data());
  }
  state.SetItemsProcessed(state.iterations() * (rho.cutoff() + 1) * samples);
}

void BM_GridOpenMP(benchmark::State& state) {
  const auto rho = coherent(static_cast<int>(state.range(0)));
  const int samples = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto grid = npw::wigner_grid(rho, rho.cutoff(), samples);
    benchmark::DoNotOptimize(grid.values.data());
  }
  state.SetItemsProcessed(state.iterations() * (rho.cutoff() + 1) * samples);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_PhaseDistribution(benchmark::State& state) {
  const auto rho = coherent(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto p = npw::phase_distribution(rho, static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(p.values.data());
  }
}

}  // namespace

BENCHMARK(BM_GridSerial)->Args({64, 512})->Args({256, 1024})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridOpenMP)->Args({64, 512})->Args({256, 1024})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhaseDistribution)->Args({64, 512})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
