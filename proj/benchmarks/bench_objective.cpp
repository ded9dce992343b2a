#include <benchmark/benchmark.h>

#include <vector>

#include "kmfactor/objective.hpp"
#include "kmfactor/random.hpp"

namespace {

kmf::DenseMatrix random_data(std::size_t m, std::size_t n, kmf::Rng& rng) {
    std::vector<double> v(m * n);
    for (double& e : v) {
        e = rng.uniform(-10.0, 10.0);
    }
    return kmf::DenseMatrix(m, n, std::move(v));
}

kmf::IndicatorMatrix round_robin(std::size_t k, std::size_t n) {
    std::vector<std::size_t> labels(n);
    for (std::size_t j = 0; j < n; ++j) {
        labels[j] = j % k;
    }
    return kmf::IndicatorMatrix(k, std::move(labels));
}

void BM_ObjectivePointwise(benchmark::State& state) {
    kmf::Rng rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = random_data(8, n, rng);
    const auto z = round_robin(8, n);
    const auto m = kmf::optimal_centroids(x, z);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kmf::objective_pointwise(x, m, z));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ObjectivePointwise)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_ObjectiveFactored(benchmark::State& state) {
    kmf::Rng rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = random_data(8, n, rng);
    const auto z = round_robin(8, n);
    const auto m = kmf::optimal_centroids(x, z);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kmf::objective_factored(x, m, z));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ObjectiveFactored)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

// Forms the n x n projector, so n stays small.
void BM_ObjectiveProjected(benchmark::State& state) {
    kmf::Rng rng(3);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = random_data(8, n, rng);
    const auto z = round_robin(8, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kmf::objective_projected(x, z));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ObjectiveProjected)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

}  // namespace
