// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "pochhammer/homology.hpp"
#include "pochhammer/linalg.hpp"

using namespace pochhammer;

namespace {

MatrixF random_matrix(std::size_t n, std::size_t nvars, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3), expo(-1, 2), nterms(0, 3);
    MatrixF m(n, n, nvars);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            LaurentPoly p(nvars);
            const int k = nterms(rng);
            for (int t = 0; t < k; ++t) {
                std::vector<std::int32_t> e(nvars);
                for (auto& x : e) x = expo(rng);
                p = p + LaurentPoly::monomial(ExponentVector(e), coeff(rng));
            }
            m.set(r, c, FieldElement(p));
        }
    }
    return m;
}

Execution exec_of(const benchmark::State& state) {
    return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_RankExact(benchmark::State& state) {
    const MatrixF m = random_matrix(static_cast<std::size_t>(state.range(0)), 3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m, exec_of(state)));
}

void BM_RankRandomized(benchmark::State& state) {
    const MatrixF m = random_matrix(static_cast<std::size_t>(state.range(0)), 4, 11);
    for (auto _ : state) benchmark::DoNotOptimize(rank_randomized(m, 2, 0, exec_of(state)));
}

void BM_BettiBatch(benchmark::State& state) {
    const Presentation p = surface_presentation(static_cast<int>(state.range(0)), 0);
    std::vector<AlphaHom> alphas(8, AlphaHom::hurewicz(p));
    RankOptions opts;
    opts.exec = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(twisted_betti_batch(p, alphas, opts));
}

}  // namespace

BENCHMARK(BM_RankExact)->ArgsProduct({{4, 5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankRandomized)->ArgsProduct({{8, 16, 32}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BettiBatch)->ArgsProduct({{2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
