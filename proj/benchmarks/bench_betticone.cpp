#include "betticone/betti.hpp"
#include "betticone/cone.hpp"
#include "betticone/homology.hpp"
#include "betticone/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace betticone;

namespace {

void BM_HochsterComplete(benchmark::State& state) {
    const Graph g = make_named(NamedFamily::complete, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hochster_diagram(g));
    }
}
BENCHMARK(BM_HochsterComplete)->DenseRange(6, 12, 2);

void BM_HochsterCycleComplement(benchmark::State& state) {
    const Graph g = complement(make_named(NamedFamily::cycle, static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hochster_diagram(g));
    }
}
BENCHMARK(BM_HochsterCycleComplement)->DenseRange(6, 12, 2);

void BM_HomologyGF2(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const int n = static_cast<int>(state.range(0));
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (rng() % 3 == 0) {
                edges.emplace_back(u, v);
            }
        }
    }
    const auto delta = independence_complex(Graph::from_edges(n, edges));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduced_homology_dims(delta, FieldSpec::prime_field(2)));
    }
}
BENCHMARK(BM_HomologyGF2)->DenseRange(8, 14, 2);

void BM_HkSubspace(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hk_subspace_dim(n, n / 2));
    }
}
BENCHMARK(BM_HkSubspace)->Arg(10)->Arg(20);

void BM_Witnesses(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(witnesses_cnh(n, n / 2));
    }
}
BENCHMARK(BM_Witnesses)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_EnumerateHeight(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_cone_dim(n, n / 2, false, false));
    }
}
BENCHMARK(BM_EnumerateHeight)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
