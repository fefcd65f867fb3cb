#include <benchmark/benchmark.h>

#include <sstream>

#include "adr/endo.hpp"

namespace {

std::string star_alg(int n) {
    std::ostringstream out;
    out << "quiver\nvertices:";
    for (int v = 1; v <= n; ++v) out << " " << v;
    out << "\n";
    for (int v = 2; v <= n; ++v) out << "arrow a" << v << ": 1 -> " << v << "\n";
    return out.str();
}

std::vector<adr::NamedRep> regular_locals(const adr::Presentation& pres) {
    std::vector<adr::NamedRep> out;
    for (int v = 0; v < pres.num_vertices(); ++v)
        out.push_back({adr::projective_rep(pres, v), "P(" + pres.quiver().vertices[v] + ")"});
    return out;
}

void BM_stratify_star(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    adr::Presentation pres = adr::Presentation::parse(star_alg(n));
    for (auto _ : state) {
        adr::AdrModule adr(pres, regular_locals(pres));
        benchmark::DoNotOptimize(adr::stratify(adr));
    }
}
BENCHMARK(BM_stratify_star)->Arg(3)->Arg(4)->Arg(5);

void BM_gldim_star_regular(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    adr::Presentation pres = adr::Presentation::parse(star_alg(n));
    for (auto _ : state) {
        adr::AdrModule adr(pres, regular_locals(pres));
        adr::StratTable t = adr::stratify(adr);
        adr::BasicAlgebra b = adr::endomorphism_algebra(adr);
        benchmark::DoNotOptimize(adr::global_dimension(b, t.n_M));
    }
}
BENCHMARK(BM_gldim_star_regular)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
