#include <benchmark/benchmark.h>

#include "zetaxray/gram.hpp"
#include "zetaxray/oracle.hpp"
#include "zetaxray/xray.hpp"
#include "zetaxray/zeta.hpp"

namespace {

using namespace zx;

const complex dirichlet_s{0.5, 1.0e6};

void dirichlet_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_partial_sum_serial(dirichlet_s, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void dirichlet_parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_partial_sum(dirichlet_s, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

const Rectangle grid_rect(-30, 10, -10, 40);

void grid_serial(benchmark::State& state) {
    const FunctionOracle f = FunctionOracle::zeta();
    const GridSpec g = GridSpec::for_rect(grid_rect, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sample_grid_serial(f, grid_rect, g));
    state.SetItemsProcessed(state.iterations() * (g.nx + 1) * (g.ny + 1));
}

void grid_parallel(benchmark::State& state) {
    const FunctionOracle f = FunctionOracle::zeta();
    const GridSpec g = GridSpec::for_rect(grid_rect, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sample_grid(f, grid_rect, g));
    state.SetItemsProcessed(state.iterations() * (g.nx + 1) * (g.ny + 1));
}

void scan_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(scan_gram_range_serial(5000, 5000 + state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void scan_parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(scan_gram_range(5000, 5000 + state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(dirichlet_serial)->Arg(1 << 18)->Arg(1 << 21)->Unit(benchmark::kMillisecond);
BENCHMARK(dirichlet_parallel)->Arg(1 << 18)->Arg(1 << 21)->Unit(benchmark::kMillisecond);
BENCHMARK(grid_serial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(grid_parallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(scan_serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(scan_parallel)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
