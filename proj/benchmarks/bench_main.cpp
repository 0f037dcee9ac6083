#include <benchmark/benchmark.h>

#include <random>

#include "submodkit/submodkit.hpp"

using namespace submodkit;

namespace {

void BM_is_submodular(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SetFunction f = oracle::random_rank_function(std::min(n, 8), 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_submodular(f).holds);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_is_submodular)->DenseRange(4, 8)->Complexity();

void BM_submodularity_by_definition(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SetFunction f = oracle::random_rank_function(n, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::submodularity_by_definition(f).holds);
    }
}
BENCHMARK(BM_submodularity_by_definition)->DenseRange(4, 8);

void BM_tk_sequence(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SetFunction f = oracle::random_rank_function(n, 7);
    const ScalarTransform g = ScalarTransform::exp2_scaled(2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tk_sequence(f, g, Direction::decreasing).holds);
    }
}
BENCHMARK(BM_tk_sequence)->DenseRange(4, 9);

void BM_edge_counts(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CodeSet A = oracle::random_code_set(n, 1 << (n - 1), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(edge_counts(A, 3).edge_counts[0]);
    }
}
BENCHMARK(BM_edge_counts)->DenseRange(6, 12);

void BM_compute_md(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CodeSet A = oracle::random_code_set(n, 1 << (n - 1), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_md(A, 2).value);
    }
}
BENCHMARK(BM_compute_md)->DenseRange(6, 12);

void BM_uncross_to_chain(benchmark::State& state) {
    const int members = static_cast<int>(state.range(0));
    std::mt19937_64 rng(11);
    const GroundSet ground = GroundSet::numbered(12);
    std::vector<Mask> ms;
    for (int i = 0; i < members; ++i) ms.push_back(static_cast<Mask>(rng()) & ground.full());
    const SubsetFamily family(ground, ms);
    for (auto _ : state) {
        benchmark::DoNotOptimize(uncross_to_chain(family).steps.size());
    }
}
BENCHMARK(BM_uncross_to_chain)->RangeMultiplier(2)->Range(4, 64);

void BM_sum_entropy_fn(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto marginals = oracle::random_integer_marginals(n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_sum_entropy_fn(marginals).values().back());
    }
}
BENCHMARK(BM_sum_entropy_fn)->DenseRange(3, 8);

}  // namespace

BENCHMARK_MAIN();
