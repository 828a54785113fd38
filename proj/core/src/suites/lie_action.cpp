#include <chrono>
#include <cmath>
#include <sstream>

#include "gl2/gl2c.hpp"
#include "gl2/principal.hpp"
#include "gl2/suites.hpp"

namespace gl2 {

namespace {

MatrixPoint exp_generator(int i, int j, double eps) {
    if (i == 1 && j == 1) return MatrixPoint::diag(std::exp(eps), 1.0);
    if (i == 1 && j == 2) return {1.0, eps, 0.0, 1.0};
    if (i == 2 && j == 1) return {1.0, 0.0, eps, 1.0};
    return MatrixPoint::diag(1.0, std::exp(eps));
}

CMatrix exp_generator_c(int i, int j, Cplx eps) {
    if (i == 1 && j == 1) return {std::exp(eps), 0.0, 0.0, 1.0};
    if (i == 1 && j == 2) return {1.0, eps, 0.0, 1.0};
    if (i == 2 && j == 1) return {1.0, 0.0, eps, 1.0};
    return {1.0, 0.0, 0.0, std::exp(eps)};
}

// two Richardson levels on the central difference: O(eps^6) residual
struct FdResult {
    Cplx value;
    double err_estimate;
};
FdResult richardson(const std::function<Cplx(double)>& f, double eps) {
    auto D = [&](double h) { return (f(h) - f(-h)) / (2.0 * h); };
    const Cplx d1 = D(eps), d2 = D(eps / 2.0), d3 = D(eps / 4.0);
    const Cplx r1 = (4.0 * d2 - d1) / 3.0;
    const Cplx r2 = (4.0 * d3 - d2) / 3.0;
    const Cplx r = (16.0 * r2 - r1) / 15.0;
    return {r, std::abs(r - r2)};
}

}  // namespace

SuiteReport suite_lie_action(const SuiteConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.name = "lie-action";

    const Section phi = bump_section(cfg.section_center, cfg.section_halfwidth);
    const double eps = cfg.lie_epsilon;

    // real case: subgroup derivative vs apply_L for all four generators
    for (size_t mi = 0; mi < cfg.mu_samples.size(); ++mi) {
        const auto& mu = cfg.mu_samples[mi];
        const PrincipalParam p{mu.mu1, 0, mu.mu2, 1};
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                for (size_t ti = 0; ti < cfg.lie_t.size(); ++ti) {
                    const double t = cfg.lie_t[ti];
                    auto f = [&](double h) { return apply_T(p, exp_generator(i, j, h), phi, t); };
                    const FdResult fd = richardson(f, eps);
                    const Cplx lhs = fd.value;
                    const Cplx rhs = apply_L(p, i, j, phi, t);
                    std::ostringstream key;
                    key << "R|L" << i << j << "|mu" << mi << "|t" << ti;
                    std::ostringstream desc;
                    desc << "d/deps T(exp(eps e" << i << j << ")) vs L" << i << j << " at t=" << t;
                    rep.add(make_case(key.str(), desc.str(), lhs, rhs, fd.err_estimate,
                                      cfg.tol_lie));
                }
    }

    // complex case: holomorphic/antiholomorphic split of the subgroup derivative
    {
        const ComplexParam p{cfg.cs_mu1, cfg.cs_mu1p, cfg.cs_mu2, cfg.cs_mu2p, cfg.cs_sigma,
                             cfg.cs_sigmap};
        const CSection cphi = bump_csection({0.1, 0.05}, 1.2);
        const Cplx t{0.2, -0.15};
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                auto fx = [&](double h) {
                    return apply_T_c(p, exp_generator_c(i, j, Cplx(h, 0.0)), cphi, t);
                };
                auto fy = [&](double h) {
                    return apply_T_c(p, exp_generator_c(i, j, Cplx(0.0, h)), cphi, t);
                };
                const FdResult dx = richardson(fx, eps);
                const FdResult dy = richardson(fy, eps);
                const Cplx hol = 0.5 * (dx.value - Cplx(0.0, 1.0) * dy.value);
                const Cplx antih = 0.5 * (dx.value + Cplx(0.0, 1.0) * dy.value);
                const double err = dx.err_estimate + dy.err_estimate;
                {
                    std::ostringstream key;
                    key << "C|L" << i << j;
                    rep.add(make_case(key.str(), "holomorphic subgroup derivative vs L_c", hol,
                                      apply_L_c(p, i, j, false, cphi, t), err,
                                      cfg.tol_lie_complex));
                }
                {
                    std::ostringstream key;
                    key << "C|Lbar" << i << j;
                    rep.add(make_case(key.str(), "antiholomorphic subgroup derivative vs Lbar_c",
                                      antih, apply_L_c(p, i, j, true, cphi, t), err,
                                      cfg.tol_lie_complex));
                }
            }
    }

    // negative control: the finite difference of e12 compared against L22
    {
        const auto& mu = cfg.mu_samples[0];
        const PrincipalParam p{mu.mu1, 0, mu.mu2, 1};
        const double t = cfg.lie_t[0];
        auto f = [&](double h) { return apply_T(p, exp_generator(1, 2, h), phi, t); };
        const FdResult fd = richardson(f, eps);
        CaseRecord c = make_case("zcontrol", "FD of exp(eps e12) vs L22 [must fail]", fd.value,
                                 apply_L(p, 2, 2, phi, t), fd.err_estimate, cfg.tol_lie);
        c.negative_control = true;
        c.pass = !c.pass;
        rep.add(c);
    }

    rep.finalize();
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
}

}  // namespace gl2
