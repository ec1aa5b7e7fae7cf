// Serial reference vs OpenMP kernels for the discretized tube.
//   ./capflow_bench --benchmark_filter=ElementSum
// Set OMP_NUM_THREADS to compare thread counts.

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "capflow/kernels.hpp"
#include "capflow/oracle.hpp"

namespace {

using namespace capflow;

void BM_ElementSumSerial(benchmark::State& state) {
    const RadiusProfile profile(kCanonicalFixture.geometry(TubeKind::Sinusoidal));
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            kernels::element_sum_serial(profile, n, RadiusAveraging::EndpointMean));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ElementSumChunked(benchmark::State& state) {
    const RadiusProfile profile(kCanonicalFixture.geometry(TubeKind::Sinusoidal));
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            kernels::element_sum_chunked(profile, n, RadiusAveraging::EndpointMean));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<std::size_t> counts_up_to(std::size_t n) {
    std::vector<std::size_t> counts(n);
    std::iota(counts.begin(), counts.end(), std::size_t{1});
    return counts;
}

void BM_ConvergenceSerial(benchmark::State& state) {
    const auto& fx = kCanonicalFixture;
    const auto geom = fx.geometry(TubeKind::HyperbolicCosine);
    const auto counts = counts_up_to(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            convergence_series_serial(geom, fx.fluid(), fx.model(), fx.q, counts));
    }
}

void BM_ConvergenceParallel(benchmark::State& state) {
    const auto& fx = kCanonicalFixture;
    const auto geom = fx.geometry(TubeKind::HyperbolicCosine);
    const auto counts = counts_up_to(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(convergence_series(geom, fx.fluid(), fx.model(), fx.q, counts));
    }
}

}  // namespace

BENCHMARK(BM_ElementSumSerial)->RangeMultiplier(10)->Range(1'000, 10'000'000);
BENCHMARK(BM_ElementSumChunked)->RangeMultiplier(10)->Range(1'000, 10'000'000);
BENCHMARK(BM_ConvergenceSerial)->Arg(200)->Arg(2000);
BENCHMARK(BM_ConvergenceParallel)->Arg(200)->Arg(2000);

BENCHMARK_MAIN();
