#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gl2/quadrature.hpp"
#include "gl2/testfn.hpp"

using namespace gl2;

namespace {
const std::array<Interval, 3> unit3 = {Interval{0.0, 1.0}, Interval{0.0, 1.0}, Interval{0.0, 1.0}};
std::span<const Interval> span3() { return {unit3.data(), 3}; }
}  // namespace

TEST_CASE("integrate_box: constants and polynomial exactness") {
    auto one = [](const double*) { return Cplx{1.0, 0.0}; };
    const IntegralResult r = integrate_box_fn(one, span3(), PanelRule{8, 1});
    CHECK(std::abs(r.value - 1.0) < 1e-13);
    CHECK(r.error < 1e-13);

    auto f = [](const double* x) { return Cplx{x[0] * x[0] * x[1] * x[1] * x[2] * x[2], 0.0}; };
    const IntegralResult r2 = integrate_box_fn(f, span3(), PanelRule{2, 1});
    CHECK(std::abs(r2.value - 1.0 / 27.0) < 1e-14);
}

TEST_CASE("integrate_box: bump profile stabilizes to >= 10 digits by order 24") {
    const TestFunction F{BumpBox(MatrixPoint::identity(), {0.2, 0.2, 0.2, 0.2})};
    const std::array<Interval, 4> box = {Interval{0.8, 1.2}, Interval{-0.2, 0.2},
                                         Interval{-0.2, 0.2}, Interval{0.8, 1.2}};
    auto f = [&F](const double* x) { return Cplx{F.eval({x[0], x[1], x[2], x[3]}), 0.0}; };
    const IntegralResult r = integrate_box_fn(f, std::span<const Interval>(box.data(), 4),
                                              PanelRule{24, 4});
    // independently computed via a 30-digit 1-d quadrature: (0.2 b)^4
    const double expect = 6.21766999967527402769939545067e-5;
    CHECK(std::abs(r.value - expect) <= 1e-9 * expect);
    CHECK(r.error <= 1e-9 * expect);  // |estimate(24) - estimate(28)| self-convergence
}

TEST_CASE("integrate_box: Cauchy ladder on the 1-d bump") {
    const Interval iv{-1.0, 1.0};
    auto f = [](const double* x) { return Cplx{bump1(x[0]), 0.0}; };
    const double exact = 0.443993816168079437823;
    double prev_err = 0.0;
    int k = 0;
    for (int order : {8, 16, 32}) {
        const IntegralResult r =
            integrate_box_fn(f, std::span<const Interval>(&iv, 1), PanelRule{order, 1, false});
        const double err = std::abs(r.value - exact);
        if (k++ > 0 && prev_err > 1e-14) CHECK(err <= prev_err / 10.0);
        prev_err = err;
    }
    CHECK(prev_err < 1e-7);
}

TEST_CASE("integrate_box: linearity") {
    auto f = [](const double* x) { return Cplx{std::sin(x[0] + 2.0 * x[1] + x[2]), 0.0}; };
    auto g = [](const double* x) { return Cplx{std::exp(-x[0] * x[1]), x[2]}; };
    const Cplx a{1.7, -0.4}, b{-2.3, 0.9};
    auto combo = [&](const double* x) { return a * f(x) + b * g(x); };
    const PanelRule rule{16, 2, false};
    const Cplx lhs = integrate_box_fn(combo, span3(), rule).value;
    const Cplx rhs = a * integrate_box_fn(f, span3(), rule).value +
                     b * integrate_box_fn(g, span3(), rule).value;
    CHECK(std::abs(lhs - rhs) <= 1e-13 * (std::abs(a) + std::abs(b)));
}

TEST_CASE("integrate_box: refinement stall raises") {
    auto rough = [](const double* x) { return Cplx{x[0] < 0.37 ? 1.0 : 0.0, 0.0}; };
    PanelRule rule{4, 1, true, 1e-12};
    const Interval iv{0.0, 1.0};
    CHECK_THROWS_AS(integrate_box_fn(rough, std::span<const Interval>(&iv, 1), rule),
                    QuadratureStallError);
}

TEST_CASE("integrate_singular_1d: closed forms") {
    auto one = [](double) { return Cplx{1.0, 0.0}; };
    // int_0^1 s^(-1/2) ds = 2 (kernel |t-s|^(-1/2) with t = 0)
    const Cplx v1 = integrate_singular_1d(one, Cplx{-0.5, 0.0}, 0, 0.0, 0.0, 1.0);
    CHECK(std::abs(v1 - 2.0) < 1e-11);
    // int_{-1}^{1} |s|^(-1/2) (1 - s^2) ds = 16/5
    auto f2 = [](double s) { return Cplx{1.0 - s * s, 0.0}; };
    const Cplx v2 = integrate_singular_1d(f2, Cplx{-0.5, 0.0}, 0, 0.0, -1.0, 1.0);
    CHECK(std::abs(v2 - 3.2) < 1e-11);
    // alpha = 0: smooth case agrees with integrate_box
    auto f3 = [](double s) { return Cplx{std::cos(s), 0.0}; };
    const Cplx v3 = integrate_singular_1d(f3, Cplx{0.0, 0.0}, 0, 0.25, -1.0, 1.0);
    const Interval iv{-1.0, 1.0};
    auto f3box = [](const double* x) { return Cplx{std::cos(x[0]), 0.0}; };
    const Cplx v3ref = integrate_box_fn(f3box, std::span<const Interval>(&iv, 1),
                                        PanelRule{24, 2, false})
                           .value;
    CHECK(std::abs(v3 - v3ref) < 1e-12);
}

TEST_CASE("integrate_singular_1d: odd kernel cancels an even function") {
    auto f = [](double s) { return Cplx{bump1(s / 0.8), 0.0}; };
    const Cplx v = integrate_singular_1d(f, Cplx{-0.5, 0.0}, 1, 0.0, -0.8, 0.8);
    CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("integrate_singular_1d: complex exponent against mpmath-style subtraction oracle") {
    // int_0^1 s^beta ds = 1/(beta+1) for Re beta > -1
    const Cplx beta{-0.5, 0.3};
    auto one = [](double) { return Cplx{1.0, 0.0}; };
    const Cplx v = integrate_singular_1d(one, beta, 0, 0.0, 0.0, 1.0);
    const Cplx expect = 1.0 / (beta + 1.0);
    CHECK(std::abs(v - expect) < 1e-10);
    CHECK_THROWS_AS(integrate_singular_1d(one, Cplx{-1.2, 0.0}, 0, 0.0, 0.0, 1.0), DomainError);
}

TEST_CASE("qmc: exact volume and symmetry integral") {
    const std::array<Interval, 6> box = {Interval{0.0, 2.0}, Interval{0.0, 1.0}, Interval{0.0, 1.0},
                                         Interval{0.0, 1.0}, Interval{0.0, 1.0}, Interval{0.0, 3.0}};
    auto one = [](const double*) { return Cplx{1.0, 0.0}; };
    const QmcResult r = qmc_integrate(one, std::span<const Interval>(box.data(), 6),
                                      QmcRule{1L << 12, 4, 99});
    CHECK(std::abs(r.value - 6.0) < 1e-12);

    const std::array<Interval, 6> cube = {Interval{0.0, 1.0}, Interval{0.0, 1.0},
                                          Interval{0.0, 1.0}, Interval{0.0, 1.0},
                                          Interval{0.0, 1.0}, Interval{0.0, 1.0}};
    auto osc = [](const double* x) {
        double s = 0.0;
        for (int i = 0; i < 6; ++i) s += x[i];
        return Cplx{std::sin(2.0 * M_PI * s), 0.0};
    };
    const QmcResult r2 = qmc_integrate(osc, std::span<const Interval>(cube.data(), 6),
                                       QmcRule{1L << 14, 8, 7});
    CHECK(std::abs(r2.value) <= 3.0 * r2.std_error + 1e-12);
}

TEST_CASE("qmc: separable bump product matches the tensor 1-d oracle within 3 se") {
    const std::array<Interval, 6> cube = {Interval{-1.0, 1.0}, Interval{-1.0, 1.0},
                                          Interval{-1.0, 1.0}, Interval{-1.0, 1.0},
                                          Interval{-1.0, 1.0}, Interval{-1.0, 1.0}};
    auto f = [](const double* x) {
        double p = 1.0;
        for (int i = 0; i < 6; ++i) p *= bump1(x[i]);
        return Cplx{p, 0.0};
    };
    const QmcResult r = qmc_integrate(f, std::span<const Interval>(cube.data(), 6),
                                      QmcRule{1L << 16, 8, 2024});
    const double b1 = 0.443993816168079437823;  // 1-d bump integral, 30-digit oracle
    const double expect = std::pow(b1, 6.0);
    CHECK(std::abs(r.value - expect) <= 3.0 * r.std_error);
    CHECK(r.std_error < 0.01 * expect);
}

TEST_CASE("qmc: replicate spread is an honest error bar (>= 99% 3-se coverage)") {
    // closed form: int over [0,1]^6 of prod (1 + (x_i - 1/2)) = 1
    auto f = [](const double* x) {
        double p = 1.0;
        for (int i = 0; i < 6; ++i) p *= 1.0 + (x[i] - 0.5);
        return Cplx{p, 0.0};
    };
    const std::array<Interval, 6> cube = {Interval{0.0, 1.0}, Interval{0.0, 1.0},
                                          Interval{0.0, 1.0}, Interval{0.0, 1.0},
                                          Interval{0.0, 1.0}, Interval{0.0, 1.0}};
    int cover = 0;
    const int runs = 200;
    for (int seed = 0; seed < runs; ++seed) {
        const QmcResult r = qmc_integrate(f, std::span<const Interval>(cube.data(), 6),
                                          QmcRule{1L << 10, 8, std::uint64_t(seed) + 1});
        if (std::abs(r.value - 1.0) <= 3.0 * r.std_error) ++cover;
    }
    CHECK(cover >= int(0.99 * runs));
}

TEST_CASE("rule invariants are enforced") {
    auto one = [](const double*) { return Cplx{1.0, 0.0}; };
    const Interval iv{0.0, 1.0};
    CHECK_THROWS_AS(integrate_box_fn(one, std::span<const Interval>(&iv, 1), PanelRule{1, 1}),
                    DomainError);
    CHECK_THROWS_AS(integrate_box_fn(one, std::span<const Interval>(&iv, 1), PanelRule{4, 0}),
                    DomainError);
    const std::array<Interval, 6> cube = {iv, iv, iv, iv, iv, iv};
    CHECK_THROWS_AS(qmc_integrate(one, std::span<const Interval>(cube.data(), 6),
                                  QmcRule{512, 8, 1}),
                    DomainError);
}
