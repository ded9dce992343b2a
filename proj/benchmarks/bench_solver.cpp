#include <benchmark/benchmark.h>

#include <vector>

#include "kmfactor/oracle.hpp"
#include "kmfactor/random.hpp"
#include "kmfactor/solver.hpp"

namespace {

kmf::DenseMatrix blobs(std::size_t m, std::size_t n, std::size_t centers, kmf::Rng& rng) {
    std::vector<double> v(m * n);
    for (std::size_t j = 0; j < n; ++j) {
        const double offset = 20.0 * static_cast<double>(j % centers);
        for (std::size_t l = 0; l < m; ++l) {
            v[l * n + j] = offset + rng.uniform(-1.0, 1.0);
        }
    }
    return kmf::DenseMatrix(m, n, std::move(v));
}

void BM_Fit(benchmark::State& state) {
    kmf::Rng rng(4);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = blobs(4, n, 8, rng);
    kmf::SolverConfig cfg;
    cfg.k = 8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kmf::fit(x, cfg));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fit)->RangeMultiplier(4)->Range(256, 65536)->Complexity()->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
    kmf::Rng rng(5);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = blobs(2, n, 3, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kmf::enumerate_global_min(x, 3));
    }
}
BENCHMARK(BM_Oracle)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace
