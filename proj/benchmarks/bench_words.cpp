#include <benchmark/benchmark.h>

#include <random>

#include "gradlab/presentation.hpp"
#include "gradlab/word.hpp"

using namespace gradlab;

namespace {

Word random_word(std::mt19937_64& rng, int gens, size_t len) {
    std::uniform_int_distribution<int> pick(0, 2 * gens - 1);
    std::vector<Letter> ls(len);
    for (auto& l : ls) l = pick(rng);
    return Word::from_letters(ls);
}

}  // namespace

static void BM_FreeReduction(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<Letter> raw(static_cast<size_t>(state.range(0)));
    std::uniform_int_distribution<int> pick(0, 3);
    for (auto& l : raw) l = pick(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Word::from_letters(raw));
    }
}
BENCHMARK(BM_FreeReduction)->Range(64, 1 << 14);

static void BM_WordProduct(benchmark::State& state) {
    std::mt19937_64 rng(2);
    Word u = random_word(rng, 2, static_cast<size_t>(state.range(0)));
    Word v = random_word(rng, 2, static_cast<size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(u * v);
    }
}
BENCHMARK(BM_WordProduct)->Range(64, 1 << 12);

static void BM_EnumerateReducedWords(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_reduced_words(2, static_cast<size_t>(state.range(0))));
    }
}
BENCHMARK(BM_EnumerateReducedWords)->Range(16, 1 << 12);

BENCHMARK_MAIN();
