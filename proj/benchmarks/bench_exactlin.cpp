#include <benchmark/benchmark.h>

#include <random>

#include "adr/matrix.hpp"

namespace {

adr::Matrix random_matrix(std::mt19937_64& rng, int r, int c) {
    adr::Matrix m(adr::PrimeField(101), r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<uint32_t>(rng() % 101);
    return m;
}

void BM_rank(benchmark::State& state) {
    std::mt19937_64 rng(42);
    int n = static_cast<int>(state.range(0));
    adr::Matrix m = random_matrix(rng, n, n);
    for (auto _ : state) benchmark::DoNotOptimize(adr::rank(m));
}
BENCHMARK(BM_rank)->Arg(32)->Arg(64)->Arg(128);

void BM_kernel(benchmark::State& state) {
    std::mt19937_64 rng(43);
    int n = static_cast<int>(state.range(0));
    adr::Matrix m = random_matrix(rng, n / 2, n);
    for (auto _ : state) benchmark::DoNotOptimize(adr::kernel_basis(m));
}
BENCHMARK(BM_kernel)->Arg(32)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
