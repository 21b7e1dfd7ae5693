#include "listpack/constructive.hpp"
#include "listpack/exact.hpp"
#include "listpack/generators.hpp"
#include "listpack/matrix.hpp"
#include "listpack/random_instances.hpp"

#include <benchmark/benchmark.h>

using namespace listpack;

static void BM_Permanent(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    CounterRng rng(1, 0);
    auto a = matrix::BinaryMatrix(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            a.set(i, j, rng.bernoulli(0.5));
    for (auto _ : state)
        benchmark::DoNotOptimize(matrix::permanent(a));
}
BENCHMARK(BM_Permanent)->DenseRange(8, 16, 4);

static void BM_FindPackingShift(benchmark::State& state) {
    auto inst = generators::gen_shift_construction(static_cast<int>(state.range(0)));
    auto cover = list_to_cover(inst.graph, inst.lists);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact::find_packing(cover));
}
BENCHMARK(BM_FindPackingShift)->Arg(2)->Arg(3);

static void BM_PackDegenerate(benchmark::State& state) {
    CounterRng rng(2, 0);
    auto g = sample::random_graph(static_cast<int>(state.range(0)), 0.1, rng);
    auto cover = sample::random_cover(g, std::max(1, 2 * degeneracy_order(g).degeneracy), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(constructive::pack_degenerate(cover));
}
BENCHMARK(BM_PackDegenerate)->Arg(50)->Arg(200);

static void BM_PermZeroMonteCarlo(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(matrix::zero_permanent_prob_mc(static_cast<int>(state.range(0)), 0.5, 10'000, 7));
}
BENCHMARK(BM_PermZeroMonteCarlo)->Arg(8)->Arg(12);
BENCHMARK_MAIN();
