#include <benchmark/benchmark.h>

#include "gl2/quadrature.hpp"
#include "gl2/testfn.hpp"

using namespace gl2;

static void BM_Bump3D(benchmark::State& state) {
    const int order = int(state.range(0));
    const std::array<Interval, 3> box = {Interval{-1.0, 1.0}, Interval{-1.0, 1.0},
                                         Interval{-1.0, 1.0}};
    auto f = [](const double* x) {
        return Cplx{bump1(x[0]) * bump1(x[1]) * bump1(x[2]), 0.0};
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            integrate_box_fn(f, std::span<const Interval>(box.data(), 3),
                             PanelRule{order, 2, false}));
    }
    state.SetComplexityN(order);
}
BENCHMARK(BM_Bump3D)->Arg(8)->Arg(16)->Arg(24);

static void BM_SingularPower(benchmark::State& state) {
    auto f = [](double s) { return Cplx{1.0 - s * s, 0.0}; };
    for (auto _ : state)
        benchmark::DoNotOptimize(
            integrate_singular_1d(f, Cplx{-0.5, 0.3}, 1, 0.2, -1.0, 1.0));
}
BENCHMARK(BM_SingularPower);

static void BM_Sobol6(benchmark::State& state) {
    std::vector<std::array<double, 6>> pts;
    const auto shift = qmc_digital_shift(7, 0);
    for (auto _ : state) {
        sobol6_points(1L << 12, shift, pts);
        benchmark::DoNotOptimize(pts.data());
    }
}
BENCHMARK(BM_Sobol6);
