// Serial reference vs OpenMP kernel on the two workloads that dominate runtime:
// a gamma_x sweep of exact ground states and the coarse grid of a peak search.

#include <benchmark/benchmark.h>

#include <span>
#include <vector>

#include "lipkin/grid.hpp"
#include "lipkin/spectrum.hpp"
#include "lipkin/susceptibility.hpp"

namespace {

using namespace lipkin;

std::vector<double> sweep_grid() { return grid::linspace(-2.0, 0.0, 64); }

void BM_GroundSweepSerial(benchmark::State& state) {
    const auto gs = sweep_grid();
    const auto n = state.range(0);
    for (auto _ : state) {
        auto e = grid::map_serial(std::span<const double>(gs),
                                  [n](double g) { return exact::ground_state({1, g, 1, n}).levels[0].energy; });
        benchmark::DoNotOptimize(e);
    }
}

void BM_GroundSweepParallel(benchmark::State& state) {
    const auto gs = sweep_grid();
    const auto n = state.range(0);
    for (auto _ : state) {
        auto e = grid::map_parallel(std::span<const double>(gs),
                                    [n](double g) { return exact::ground_state({1, g, 1, n}).levels[0].energy; });
        benchmark::DoNotOptimize(e);
    }
}

void BM_ChiGridSerial(benchmark::State& state) {
    const auto gs = grid::linspace(-1.5, -0.5, 64);
    const auto n = state.range(0);
    for (auto _ : state) {
        auto c = grid::map_serial(std::span<const double>(gs), [n](double g) { return exact::chi_f_resolvent({1, g, 1, n}); });
        benchmark::DoNotOptimize(c);
    }
}

void BM_ChiGridParallel(benchmark::State& state) {
    const auto gs = grid::linspace(-1.5, -0.5, 64);
    const auto n = state.range(0);
    for (auto _ : state) {
        auto c = grid::map_parallel(std::span<const double>(gs), [n](double g) { return exact::chi_f_resolvent({1, g, 1, n}); });
        benchmark::DoNotOptimize(c);
    }
}

}  // namespace

BENCHMARK(BM_GroundSweepSerial)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GroundSweepParallel)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChiGridSerial)->Arg(1024)->Arg(16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChiGridParallel)->Arg(1024)->Arg(16384)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
