#include <benchmark/benchmark.h>

#include "gl2/scalars.hpp"

using namespace gl2;

static void BM_PowerR(benchmark::State& state) {
    const SignedExponent e{Cplx{-1.2, 0.7}, 1};
    double x = -1.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(power_r(x, e));
        x = x < 0 ? -x : -x - 1e-9;
    }
}
BENCHMARK(BM_PowerR);

static void BM_PowerC(benchmark::State& state) {
    const BiExponent e{Cplx{-1.5, 0.5}, Cplx{0.5, 0.5}};
    const Cplx z{0.8, -0.6};
    for (auto _ : state) benchmark::DoNotOptimize(power_c(z, e));
}
BENCHMARK(BM_PowerC);

static void BM_DensityPrincipal(benchmark::State& state) {
    double s = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(plancherel_density_principal(s, 0.0, 1, 0));
        s += 1e-6;
    }
}
BENCHMARK(BM_DensityPrincipal);
