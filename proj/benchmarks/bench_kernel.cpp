#include <benchmark/benchmark.h>

#include "gl2/principal.hpp"

using namespace gl2;

static void BM_KernelK(benchmark::State& state) {
    const int order = int(state.range(0));
    const TestFunction F{BumpBox(MatrixPoint::identity(), {0.2, 0.2, 0.2, 0.2})};
    const PrincipalParam p{Cplx{0.3, 0.7}, 1, Cplx{-0.2, -0.1}, 0};
    KernelFamily fam(F, p, 2.0, PanelRule{order, 2, false});
    fam.set_cache_enabled(false);
    for (auto _ : state)
        benchmark::DoNotOptimize(fam.eval(0.35, 0.2, 0, 0, KernelDeriv::None));
}
BENCHMARK(BM_KernelK)->Arg(16)->Arg(24)->Arg(28);

static void BM_FourierDirect(benchmark::State& state) {
    const TestFunction F{BumpBox(MatrixPoint::identity(), {0.2, 0.2, 0.2, 0.2})};
    const PrincipalParam p{Cplx{0.3, 0.7}, 1, Cplx{-0.2, -0.1}, 0};
    const Section phi = bump_section(0.25, 1.5);
    const PanelRule rule{12, 2, false};
    for (auto _ : state) benchmark::DoNotOptimize(fourier_direct(F, p, phi, 0.35, rule));
}
BENCHMARK(BM_FourierDirect);
