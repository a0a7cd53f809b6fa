#include <benchmark/benchmark.h>

#include <vector>

#include "ncclark/freealg.hpp"
#include "ncclark/gns.hpp"
#include "ncclark/hbspace.hpp"
#include "ncclark/series.hpp"
#include "ncclark/states.hpp"

using namespace ncclark;

static void BM_SeriesMul(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    Multiplier b = makeTwoPointMultiplier(N);
    TruncatedSeries f = cayleyHerglotz(b.series, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(tsMul(b.series, f));
    state.SetComplexityN(N);
}
BENCHMARK(BM_SeriesMul)->Arg(16)->Arg(32)->Arg(64)->Complexity();

static void BM_GramAssembly(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    MomentState mu = acState(makeTwoPointMultiplier(2 * N), 1.0, 2 * N);
    for (auto _ : state) benchmark::DoNotOptimize(buildGnsSpace(mu, N));
    state.SetComplexityN(N);
}
BENCHMARK(BM_GramAssembly)->Arg(8)->Arg(16)->Arg(24)->Complexity();

static void BM_FockOracle(benchmark::State& state) {
    const int maxLen = static_cast<int>(state.range(0));
    FockTruncation fock = fockBuild(2, maxLen);
    MultiIndex n{2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(fockEvaluate(symProduct(n, n), fock));
}
BENCHMARK(BM_FockOracle)->Arg(6)->Arg(8)->Arg(10);

static void BM_CauchyTransformSeries(benchmark::State& state) {
    Multiplier b = makeCoordinateMultiplier(2, 2 * tailDegreeFor(0.5));
    TransformContext ctx = makeTransformContext(b, 1.0, 0.5);
    std::vector<Complex> w{{0.3, 0.0}, {0.2, 0.1}};
    SymElement g = resolventKernelElement(ctx, w);
    for (auto _ : state) benchmark::DoNotOptimize(cauchyTransformSeries(ctx, g));
}
BENCHMARK(BM_CauchyTransformSeries);

BENCHMARK_MAIN();
