// Serial reference path vs OpenMP path for the element-parallel kernels.
// Arg 0 selects serial, 1 parallel.

#include <benchmark/benchmark.h>

#include <vector>

#include "sgcs/execution.hpp"
#include "sgcs/limits.hpp"
#include "sgcs/quantize.hpp"
#include "sgcs/stats.hpp"

using namespace sgcs;

namespace {

Execution exec_of(const benchmark::State& st) { return st.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void BM_IdentityResolutionSgi(benchmark::State& st) {
    for (auto _ : st) {
        benchmark::DoNotOptimize(identity_resolution_check({Family::sgi, {}, 2.5, 0}, 24, exec_of(st)));
    }
    label(st);
}

void BM_QuantizeModulus(benchmark::State& st) {
    QuantizeOptions opts;
    opts.n_max = 40;
    opts.exec = exec_of(st);
    for (auto _ : st) benchmark::DoNotOptimize(quantize_modulus_sgi(3.0, 0.7, opts));
    label(st);
}

void BM_StatsSweepSgi(benchmark::State& st) {
    std::vector<double> radii;
    for (int i = 0; i < 400; ++i) radii.push_back(0.02 * i);
    const StateFamily base{Family::sgi, {}, 5.0, 0};
    for (auto _ : st) benchmark::DoNotOptimize(stats_sweep(base, radii, exec_of(st)));
    label(st);
}

void BM_ContractionReport(benchmark::State& st) {
    std::vector<double> grid;
    for (double k = 10; k <= 2560; k *= 2) grid.push_back(k);
    for (auto _ : st) benchmark::DoNotOptimize(contraction_report(ContractionFamily::sgi, grid, 1.0, 30, exec_of(st)));
    label(st);
}

}  // namespace

BENCHMARK(BM_IdentityResolutionSgi)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_QuantizeModulus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_StatsSweepSgi)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ContractionReport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
