#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gl2/gl2c.hpp"
#include "gl2/quadrature.hpp"
#include "gl2/testfn.hpp"

using namespace gl2;

namespace {

ComplexTestFunction default_cfn(double r = 0.2) {
    return ComplexTestFunction{CMatrix::identity(), {r, r, r, r, r, r, r, r}};
}

ComplexParam default_cparam() {
    return ComplexParam{Cplx{0.2, 0.5}, Cplx{-0.8, 0.5}, Cplx{-0.3, -0.4}, Cplx{0.7, -0.4},
                        Cplx{0.0, 0.3}, Cplx{0.0, -0.2}};
}

}  // namespace

TEST_CASE("ComplexParam: integrality and temperedness") {
    CHECK_THROWS_AS(ComplexParam(Cplx{0.5, 0.0}, Cplx{0.2, 0.0}, Cplx{0.0, 0.0}, Cplx{0.0, 0.0}),
                    DomainError);
    const ComplexParam p{Cplx{0.0, 0.7}, Cplx{-1.0, 0.7}, Cplx{0.0, -0.2}, Cplx{2.0, -0.2}};
    CHECK(!p.is_tempered());
    const ComplexParam tempered{Cplx{0.5, 0.7}, Cplx{-0.5, 0.7}, Cplx{-1.0, 0.0}, Cplx{1.0, 0.0}};
    CHECK(tempered.is_tempered());
}

TEST_CASE("apply_T_c: identity, degenerate exponents, group law") {
    const CSection phi = bump_csection({0.1, 0.05}, 1.2);
    const ComplexParam p = default_cparam();
    const Cplx t{0.2, -0.1};
    CHECK(std::abs(apply_T_c(p, CMatrix::identity(), phi, t) - phi(t)) < 1e-15);

    // mu1 = mu2 = -1/2, primes zero except the same: the cocycle is |u|^-2
    const ComplexParam q{Cplx{-0.5, 0.0}, Cplx{-0.5, 0.0}, Cplx{-0.5, 0.0}, Cplx{-0.5, 0.0}};
    const CMatrix X{Cplx{1.1, 0.1}, Cplx{-0.1, 0.05}, Cplx{0.08, -0.06}, Cplx{0.95, 0.02}};
    const Cplx u = X.x11 + t * X.x21;
    const Cplx expect = phi((X.x12 + t * X.x22) / u) / std::norm(u);
    CHECK(std::abs(apply_T_c(q, X, phi, t) - expect) < 1e-14);

    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> d(-0.25, 0.25);
    for (int n = 0; n < 10; ++n) {
        const CMatrix A{Cplx{1.0 + d(rng), d(rng)}, Cplx{d(rng), d(rng)},
                        Cplx{d(rng), d(rng)}, Cplx{1.0 + d(rng), d(rng)}};
        const CMatrix B{Cplx{1.0 + d(rng), d(rng)}, Cplx{d(rng), d(rng)},
                        Cplx{d(rng), d(rng)}, Cplx{1.0 + d(rng), d(rng)}};
        const Cplx tt{d(rng), d(rng)};
        CSection tb_phi;
        tb_phi.value = [&](Cplx z) { return apply_T_c(p, B, phi, z); };
        const Cplx lhs = apply_T_c(p, A, tb_phi, tt);
        const Cplx rhs = apply_T_c(p, A * B, phi, tt);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("apply_L_c: Wirtinger examples on t^2 tbar") {
    CSection phi;
    phi.value = [](Cplx t) { return t * t * std::conj(t); };
    phi.d = [](Cplx t) { return 2.0 * t * std::conj(t); };
    phi.dbar = [](Cplx t) { return t * t; };
    const ComplexParam p = default_cparam();
    const Cplx one{1.0, 0.0};
    CHECK(std::abs(apply_L_c(p, 1, 2, false, phi, one) - Cplx{2.0, 0.0}) < 1e-15);
    CHECK(std::abs(apply_L_c(p, 1, 2, true, phi, one) - Cplx{1.0, 0.0}) < 1e-15);
}

TEST_CASE("apply_L_c: finite-difference subgroup split matches L and Lbar") {
    const ComplexParam p = default_cparam();
    const CSection phi = bump_csection({0.1, 0.05}, 1.2);
    const Cplx t{0.2, -0.15};
    auto mat = [](int i, int j, Cplx eps) -> CMatrix {
        if (i == 1 && j == 1) return {std::exp(eps), 0.0, 0.0, 1.0};
        if (i == 1 && j == 2) return {1.0, eps, 0.0, 1.0};
        if (i == 2 && j == 1) return {1.0, 0.0, eps, 1.0};
        return {1.0, 0.0, 0.0, std::exp(eps)};
    };
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            auto Dx = [&](double h) {
                return (apply_T_c(p, mat(i, j, Cplx(h, 0.0)), phi, t) -
                        apply_T_c(p, mat(i, j, Cplx(-h, 0.0)), phi, t)) /
                       (2.0 * h);
            };
            auto Dy = [&](double h) {
                return (apply_T_c(p, mat(i, j, Cplx(0.0, h)), phi, t) -
                        apply_T_c(p, mat(i, j, Cplx(0.0, -h)), phi, t)) /
                       (2.0 * h);
            };
            const double h = 0.005;
            const Cplx dx = (4.0 * Dx(h / 2) - Dx(h)) / 3.0;
            const Cplx dy = (4.0 * Dy(h / 2) - Dy(h)) / 3.0;
            const Cplx hol = 0.5 * (dx - Cplx{0.0, 1.0} * dy);
            const Cplx antih = 0.5 * (dx + Cplx{0.0, 1.0} * dy);
            CHECK(std::abs(hol - apply_L_c(p, i, j, false, phi, t)) < 1e-7);
            CHECK(std::abs(antih - apply_L_c(p, i, j, true, phi, t)) < 1e-7);
        }
}

TEST_CASE("certify_window_c bounds |u| away from zero") {
    const ComplexTestFunction F = default_cfn();
    const ComplexWindow w = certify_window_c(F, Cplx{0.3, 0.2});
    CHECK(w.u.abs_lower() > 0.0);
    // t large enough that u = x11 + t x21 can reach zero
    CHECK_THROWS_AS(certify_window_c(F, Cplx{4.0, 0.0}), CertificationError);
}

TEST_CASE("kernel_K_c: dimensional-reduction oracle at polynomial exponents") {
    // mu1 = mu1' = 5/2 and mu2 = mu2' = 7/2 turn the powers into the
    // polynomials |u|^2 |w|^4, which split into Re/Im tensor factors for
    // real (t, s); each factor is a 3-d tensor-rule integral.
    const ComplexTestFunction F = default_cfn();
    const ComplexParam p{Cplx{2.5, 0.0}, Cplx{2.5, 0.0}, Cplx{3.5, 0.0}, Cplx{3.5, 0.0}};
    const double t = 0.25, s = 0.2;
    const ComplexWindow win = certify_window_c(F, t);

    auto part_integral = [&](bool re_part, int pu, int pw) {
        const std::array<Interval, 3> box = {re_part ? win.u.re : win.u.im,
                                             re_part ? win.v.re : win.v.im,
                                             re_part ? win.w.re : win.w.im};
        auto f = [&](const double* x) -> Cplx {
            const double u = x[0], v = x[1], w = x[2];
            const double x11 = u - t * v, x12 = s * u - s * t * v - t * w, x21 = v,
                         x22 = s * v + w;
            const double c = re_part ? 1.0 : 0.0;
            double val = bump1((x11 - c) / 0.2) * bump1(x12 / 0.2) * bump1(x21 / 0.2) *
                         bump1((x22 - c) / 0.2);
            for (int k = 0; k < pu; ++k) val *= u;
            for (int k = 0; k < pw; ++k) val *= w;
            return {val, 0.0};
        };
        return integrate_box_fn(f, std::span<const Interval>(box.data(), 3), PanelRule{20, 2, false})
            .value;
    };
    // |u|^2 |w|^4 = (xu^2 + yu^2)(xw^2 + yw^2)^2 expanded binomially
    Cplx oracle = 0.0;
    for (int iu = 0; iu <= 1; ++iu)
        for (int iw = 0; iw <= 2; ++iw) {
            const double cw = iw == 1 ? 2.0 : 1.0;
            oracle += cw * part_integral(true, 2 * iu, 2 * iw) *
                      part_integral(false, 2 * (1 - iu), 2 * (2 - iw));
        }
    const QmcResult qmc = kernel_K_c(F, p, t, s, QmcRule{1L << 16, 8, 5});
    CHECK(std::abs(qmc.value - oracle) <= 3.0 * qmc.std_error + 1e-12 * std::abs(oracle));
    CHECK(qmc.std_error < 0.02 * std::abs(oracle));
}

TEST_CASE("kernel_K_c: conjugation equivariance for a real-valued F") {
    const ComplexTestFunction F = default_cfn();
    const ComplexParam p = default_cparam();
    const Cplx t{0.15, 0.1}, s{0.1, 0.02};
    const QmcResult a = kernel_K_c(F, p, t, s, QmcRule{1L << 15, 8, 11});
    const ComplexParam pc{std::conj(p.mu1), std::conj(p.mu1p), std::conj(p.mu2),
                          std::conj(p.mu2p)};
    const QmcResult b = kernel_K_c(F, pc, std::conj(t), std::conj(s), QmcRule{1L << 15, 8, 12});
    const double joint = std::hypot(a.std_error, b.std_error);
    CHECK(std::abs(std::conj(a.value) - b.value) <= 3.0 * joint);
}

TEST_CASE("complex spot checks at reduced budget: E32 holds, E14 sign is plus") {
    const ComplexTestFunction F = default_cfn();
    const ComplexParam p = default_cparam();
    const Cplx t{0.15, 0.1}, s{0.1, 0.02};
    const QmcRule rule{1L << 15, 8, 99};

    const SpotCheck e32 = e_spotcheck_c(32, false, +1, F, p, t, s, rule);
    CHECK(e32.residual() <= 3.0 * e32.combined_err());
    const SpotCheck e32b = e_spotcheck_c(32, true, +1, F, p, t, s, rule);
    CHECK(e32b.residual() <= 3.0 * e32b.combined_err());

    const SpotCheck plus = e_spotcheck_c(14, false, +1, F, p, t, s, rule);
    const SpotCheck minus = e_spotcheck_c(14, false, -1, F, p, t, s, rule);
    CHECK(plus.residual() <= 3.0 * plus.combined_err());
    CHECK(minus.residual() > 3.0 * minus.combined_err());
}

TEST_CASE("spot check refuses mu1 = mu2") {
    const ComplexTestFunction F = default_cfn();
    const ComplexParam p{Cplx{0.5, 0.0}, Cplx{0.5, 0.0}, Cplx{0.5, 0.0}, Cplx{0.5, 0.0}};
    CHECK_THROWS_AS(e_spotcheck_c(14, false, 1, F, p, Cplx{0.1, 0.0}, Cplx{0.1, 0.0},
                                  QmcRule{1L << 10, 2, 1}),
                    PoleError);
}
