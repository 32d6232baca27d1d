#include <benchmark/benchmark.h>

#include "sqparity/gauss.hpp"
#include "sqparity/lambda.hpp"
#include "sqparity/modular.hpp"
#include "sqparity/series.hpp"

using namespace sqparity;

static void BM_ParityDp(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_by_parity(n));
}
BENCHMARK(BM_ParityDp)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_GProduct(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(g_coefficients(n));
}
BENCHMARK(BM_GProduct)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_GaussScan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gauss_agreement_scan(state.range(0)));
}
BENCHMARK(BM_GaussScan)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_LambdaScan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_lemma_bound(state.range(0)));
}
BENCHMARK(BM_LambdaScan)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_LambdaSmallStar(benchmark::State& state) {
    const ReducedFraction frac(7, 30);
    for (auto _ : state) benchmark::DoNotOptimize(lambda_small_star(frac));
}
BENCHMARK(BM_LambdaSmallStar);

static void BM_WrightTransform(benchmark::State& state) {
    const ReducedFraction frac(3, 8);
    for (auto _ : state) benchmark::DoNotOptimize(verify_wright_transform(frac, {0.5, 0.0}));
}
BENCHMARK(BM_WrightTransform)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
