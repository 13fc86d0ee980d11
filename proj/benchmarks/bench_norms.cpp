#include <benchmark/benchmark.h>

#include "basislab/constants.hpp"
#include "basislab/norms.hpp"
#include "basislab/tsirelson.hpp"
#include "basislab/vector.hpp"

using namespace basislab;

static void BM_TsirelsonIndicator(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FiniteVector x = indicator(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tsirelson_norm(x, 0.5, 128));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_TsirelsonIndicator)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void BM_TensorPower(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FiniteVector a(std::vector<double>{1.0, -0.5, 0.25});
    for (auto _ : state) {
        benchmark::DoNotOptimize(power(a, n));
    }
}
BENCHMARK(BM_TensorPower)->DenseRange(2, 10, 2);

static void BM_SignAverageExhaustive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Space o = make_oracle("lp:p=1.5");
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sign_average(*o, n, AverageMode::Exhaustive, 0, 0, 1u << 20));
    }
}
BENCHMARK(BM_SignAverageExhaustive)->DenseRange(8, 16, 4);

static void BM_NormingSetGeneration(benchmark::State& state) {
    const int window = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_norming_set(0.5, window, window));
    }
}
BENCHMARK(BM_NormingSetGeneration)->DenseRange(4, 8, 2);

BENCHMARK_MAIN();
