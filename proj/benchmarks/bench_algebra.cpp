#include <benchmark/benchmark.h>

#include <random>

#include "gradlab/chain.hpp"
#include "gradlab/finite_group.hpp"
#include "gradlab/fp_matrix.hpp"
#include "gradlab/homology.hpp"
#include "gradlab/int_matrix.hpp"
#include "gradlab/meataxe.hpp"
#include "gradlab/presentation.hpp"
#include "gradlab/smith.hpp"
#include "gradlab/todd_coxeter.hpp"

using namespace gradlab;

namespace {

IntMatrix random_int_matrix(size_t n, long long spread) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> pick(-spread, spread);
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = pick(rng);
    return m;
}

FpMatrix random_fp_matrix(long long p, size_t n) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(p - 1));
    FpMatrix m(p, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = pick(rng);
    return m;
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
    const IntMatrix m = random_int_matrix(static_cast<size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_normal_form(m));
    }
}
BENCHMARK(BM_SmithNormalForm)->Range(4, 48);

static void BM_FpRref(benchmark::State& state) {
    const FpMatrix m = random_fp_matrix(2, static_cast<size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fp_rref(m));
    }
}
BENCHMARK(BM_FpRref)->Range(32, 512);

static void BM_SubgroupHomology(benchmark::State& state) {
    // Mod-2 first homology of the level-2 subgroup of the free group of rank
    // 2 (index 128), straight off its coset table.
    const ChainResult chain = p_derived_chain_with_tables(free_group(2), 2, 2, 1 << 20);
    const CosetTable& T = chain.tables.back();
    for (auto _ : state) {
        benchmark::DoNotOptimize(h1_of_subgroup(T, {2}));
    }
}
BENCHMARK(BM_SubgroupHomology);

static void BM_PDerivedChain(benchmark::State& state) {
    const Presentation P = parse_presentation("gens: a b\nrel: aa\n");
    for (auto _ : state) {
        benchmark::DoNotOptimize(p_derived_chain(P, 2, state.range(0), 1 << 16));
    }
}
BENCHMARK(BM_PDerivedChain)->DenseRange(1, 3);

static void BM_ChopRegularModule(benchmark::State& state) {
    const FiniteGroup G = builtin_group("dihedral:" + std::to_string(state.range(0)));
    const ModuleRep M = regular_module(G, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chop(M));
    }
}
BENCHMARK(BM_ChopRegularModule)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
