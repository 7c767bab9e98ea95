#include <benchmark/benchmark.h>

#include <string>

#include "gradlab/low_index.hpp"
#include "gradlab/presentation.hpp"
#include "gradlab/todd_coxeter.hpp"

using namespace gradlab;

namespace {

Presentation dihedral_presentation(long long n) {
    return parse_presentation("gens: a b\nrel: (a)^" + std::to_string(n) +
                              "\nrel: bb\nrel: abab\n");
}

}  // namespace

static void BM_ToddCoxeterCyclic(benchmark::State& state) {
    const Presentation P =
        parse_presentation("gens: a\nrel: (a)^" + std::to_string(state.range(0)) + "\n");
    for (auto _ : state) {
        benchmark::DoNotOptimize(todd_coxeter(P, {}, 4 * state.range(0) + 64));
    }
}
BENCHMARK(BM_ToddCoxeterCyclic)->Range(64, 1 << 12);

static void BM_ToddCoxeterDihedral(benchmark::State& state) {
    const Presentation P = dihedral_presentation(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(todd_coxeter(P, {}, 8 * state.range(0) + 64));
    }
}
BENCHMARK(BM_ToddCoxeterDihedral)->Range(32, 1 << 11);

static void BM_ToddCoxeterSubgroup(benchmark::State& state) {
    // Index-n enumeration below an infinite group: the cyclic subgroup
    // generated by a^n inside <a, b | b>.
    const Presentation P = parse_presentation("gens: a b\nrel: b\n");
    const Word an = pow(Word::single(make_letter(0, +1)), state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(todd_coxeter(P, {an}, 4 * state.range(0) + 64));
    }
}
BENCHMARK(BM_ToddCoxeterSubgroup)->Range(64, 1 << 12);

static void BM_LowIndexFree(benchmark::State& state) {
    const Presentation F2 = free_group(2);
    LowIndexOptions options;
    options.expand_conjugates = true;
    for (auto _ : state) {
        benchmark::DoNotOptimize(low_index_subgroups(F2, state.range(0), options));
    }
}
BENCHMARK(BM_LowIndexFree)->DenseRange(2, 5);

static void BM_LowIndexSurface(benchmark::State& state) {
    const Presentation P = surface_group(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(low_index_subgroups(P, state.range(0)));
    }
}
BENCHMARK(BM_LowIndexSurface)->DenseRange(2, 4);

BENCHMARK_MAIN();
