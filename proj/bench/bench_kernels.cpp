// Serial reference vs OpenMP kernels on the three data-parallel workloads.

#include <benchmark/benchmark.h>

#include "tempent/axioms.hpp"
#include "tempent/fracderiv.hpp"
#include "tempent/lesche.hpp"

using namespace tempent;

namespace {

Execution exec_of(const benchmark::State& state) {
    return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_Maximality(benchmark::State& state) {
    const auto prm = EntropyParams::make(0.5, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_maximality(10, prm, 10000, 1, exec_of(state)).worst_violation);
    }
}

void BM_GeneratorConcavity(benchmark::State& state) {
    const auto prm = EntropyParams::make(0.25, 5.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_generator_concavity(prm, 100000, exec_of(state)).worst_violation);
    }
}

void BM_Sweep(benchmark::State& state) {
    const auto prm = EntropyParams::make(0.5, 1.0);
    std::vector<std::size_t> grid;
    for (std::size_t n = 3; n < 100'000'000; n = n * 11 / 10 + 1) grid.push_back(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep({Family::CertaintyA, Family::UniformB}, grid, 1e-3, prm, 0.5, exec_of(state)).size());
    }
}

void BM_FracGrid(benchmark::State& state) {
    const auto grid = FracGrid::standard();
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_frac_grid(grid, 1e-6, 1e-9, exec_of(state)).size());
    }
}

}  // namespace

// Arg 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_Maximality)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneratorConcavity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FracGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
