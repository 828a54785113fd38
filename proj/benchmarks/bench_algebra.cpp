#include <benchmark/benchmark.h>

#include "gl2/diffop.hpp"
#include "gl2/shiftop.hpp"

using namespace gl2;

static void BM_BracketDiff(benchmark::State& state) {
    const DiffOp2 a = gl4_generator(3, 1), b = gl4_generator(1, 4);
    for (auto _ : state) benchmark::DoNotOptimize(bracket_diff(a, b));
}
BENCHMARK(BM_BracketDiff);

static void BM_BracketShift(benchmark::State& state) {
    const ETable T = generate_E_table();
    for (auto _ : state) benchmark::DoNotOptimize(bracket_shift(T.at(1, 4), T.at(4, 1)));
}
BENCHMARK(BM_BracketShift);

static void BM_GenerateETable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(generate_E_table());
}
BENCHMARK(BM_GenerateETable);
