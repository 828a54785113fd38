#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gl2/testfn.hpp"

using namespace gl2;

namespace {
TestFunction default_fn() {
    return TestFunction{BumpBox(MatrixPoint::identity(), {0.2, 0.2, 0.2, 0.2})};
}
TestFunction negative_fn() {
    return TestFunction{BumpBox(MatrixPoint::diag(-1.0, 1.0), {0.2, 0.2, 0.2, 0.2})};
}
}  // namespace

TEST_CASE("eval_f examples") {
    const TestFunction F = default_fn();
    CHECK(F.eval(MatrixPoint::identity()) == doctest::Approx(std::exp(-4.0)).epsilon(1e-14));
    // on the box boundary the bump vanishes
    CHECK(F.eval(MatrixPoint{1.2, 0.0, 0.0, 1.0}) == 0.0);
    CHECK(F.eval(MatrixPoint{1.0, 0.5, 0.0, 1.0}) == 0.0);  // outside
}

TEST_CASE("partials: critical at center, zero outside, FD convergence") {
    const TestFunction F = default_fn();
    const auto g0 = F.partials(MatrixPoint::identity());
    for (double g : g0) CHECK(g == 0.0);
    const auto gout = F.partials(MatrixPoint{2.0, 0.0, 0.0, 1.0});
    for (double g : gout) CHECK(g == 0.0);

    // central differences converge at O(h^2) to the analytic partials
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-0.15, 0.15);
    for (int n = 0; n < 20; ++n) {
        MatrixPoint X{1.0 + u(rng), u(rng), u(rng), 1.0 + u(rng)};
        const auto g = F.partials(X);
        double prev = 0.0;
        for (int k = 0; k < 3; ++k) {
            const double h = 2e-3 / (1 << k);
            MatrixPoint Xp = X, Xm = X;
            Xp.x12 += h;
            Xm.x12 -= h;
            const double fd = (F.eval(Xp) - F.eval(Xm)) / (2.0 * h);
            const double err = std::abs(fd - g[1]);
            if (k > 0 && prev > 1e-12) CHECK(err < 0.5 * prev);
            prev = err;
        }
        CHECK(prev <= 1e-5 * (1.0 + std::abs(g[1])));
    }
}

TEST_CASE("haar weight") {
    CHECK(haar_weight(MatrixPoint::identity()) == 1.0);
    CHECK(haar_weight(MatrixPoint::diag(2.0, 1.0)) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(haar_weight(MatrixPoint::diag(-1.0, 1.0)) == 1.0);
    CHECK_THROWS_AS(haar_weight(MatrixPoint{1.0, 1.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("certify_window printed examples") {
    const TestFunction F = default_fn();
    const WindowCertificate c = certify_window(F, 2.0);
    CHECK(c.u.lo == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(c.u.hi == doctest::Approx(1.6).epsilon(1e-12));
    CHECK(c.det.lo >= 0.6 - 1e-12);
    CHECK(c.w.lo > 0.0);
    CHECK(c.sign_u() == 1);

    const TestFunction G = negative_fn();
    const WindowCertificate cg = certify_window(G, 2.0);
    CHECK(cg.u.hi <= -0.4 + 1e-12);
    CHECK(cg.sign_u() == -1);
    CHECK(cg.sign_w() == 1);

    CHECK_THROWS_AS(certify_window(F, 10.0), CertificationError);
}

TEST_CASE("certificate soundness on 1e5 random samples") {
    const TestFunction F = default_fn();
    const double t_max = 2.0;
    const WindowCertificate c = certify_window(F, t_max);
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> ub(-0.2, 0.2), ut(-t_max, t_max);
    for (int n = 0; n < 100000; ++n) {
        const MatrixPoint X{1.0 + ub(rng), ub(rng), ub(rng), 1.0 + ub(rng)};
        const double t = ut(rng);
        const double u = X.x11 + t * X.x21;
        const double det = X.det();
        const double w = det / u;
        CHECK(u >= c.u.lo);
        CHECK(u <= c.u.hi);
        CHECK(det >= c.det.lo);
        CHECK(det <= c.det.hi);
        CHECK(w >= c.w.lo);
        CHECK(w <= c.w.hi);
    }
}

TEST_CASE("support containment outside the box") {
    const TestFunction F = default_fn();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    int outside = 0;
    for (int n = 0; n < 2000; ++n) {
        const MatrixPoint X{u(rng), u(rng), u(rng), u(rng)};
        const bool in_box = std::abs(X.x11 - 1.0) < 0.2 && std::abs(X.x12) < 0.2 &&
                            std::abs(X.x21) < 0.2 && std::abs(X.x22 - 1.0) < 0.2;
        if (in_box) continue;
        ++outside;
        CHECK(F.eval(X) == 0.0);
        for (double g : F.partials(X)) CHECK(g == 0.0);
    }
    CHECK(outside > 1500);
}

TEST_CASE("boxes touching det = 0 are rejected") {
    CHECK_THROWS_AS(BumpBox(MatrixPoint::identity(), {1.0, 1.0, 1.0, 1.0}), CertificationError);
}
