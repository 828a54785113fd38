#include <chrono>
#include <cmath>
#include <sstream>

#include "gl2/suites.hpp"

namespace gl2 {

SuiteReport suite_densities(const SuiteConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.name = "densities";

    constexpr double kPi = 3.141592653589793238462643383279502884;
    const double hw = cfg.density_grid_halfwidth;
    const int n = cfg.density_grid_points;

    // evenness and nonnegativity over the grid, both parity classes
    for (Parity e1 = 0; e1 <= 1; ++e1) {
        bool even_ok = true, nonneg_ok = true;
        double max_asym = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = -hw + 2.0 * hw * i / (n - 1);
            const double dp = plancherel_density_principal(x, 0.0, e1, 0);
            const double dm = plancherel_density_principal(0.0, x, e1, 1);
            max_asym = std::max(max_asym, std::abs(dp - dm));
            // evenness in s1 - s2 (also eps2-independence), up to roundoff
            even_ok = even_ok && std::abs(dp - dm) <= 1e-18 + 1e-15 * std::abs(dp);
            nonneg_ok = nonneg_ok && dp >= 0.0;
        }
        CaseRecord c;
        c.key = "grid_eps" + std::to_string(e1);
        std::ostringstream desc;
        desc << "evenness and nonnegativity over " << n << "-point grid, eps1=" << e1;
        c.desc = desc.str();
        c.lhs = Cplx(max_asym, 0.0);
        c.rhs = Cplx(0.0, 0.0);
        c.abs_err = max_asym;
        c.tolerance = 0.0;
        c.pass = even_ok && nonneg_ok;
        rep.add(c);
    }

    // s -> 0 limits: 0 for the tanh class, 1/(8 pi^4) for the coth class
    {
        const double coth_limit = 1.0 / (8.0 * kPi * kPi * kPi * kPi);
        const double v0 = plancherel_density_principal(1.0, 1.0, 0, 0);
        CaseRecord c = make_case("limit_tanh", "tanh-class value at s1 = s2", Cplx(v0, 0.0),
                                 Cplx(0.0, 0.0), 0.0, cfg.tol_density_limit);
        rep.add(c);
        const double v1 = plancherel_density_principal(1.0, 1.0, 1, 0);
        const double v1b = plancherel_density_principal(1.0 + 1e-6, 1.0, 1, 0);
        CaseRecord c2 = make_case("limit_coth", "coth-class limit 1/(8 pi^4) at s1 = s2",
                                  Cplx(v1, 0.0), Cplx(coth_limit, 0.0), 0.0,
                                  cfg.tol_density_limit);
        rep.add(c2);
        CaseRecord c3 = make_case("limit_coth_approach",
                                  "coth-class approach at s1-s2 = 1e-6 (continuity)",
                                  Cplx(v1b, 0.0), Cplx(coth_limit, 0.0), 0.0, 1e-10);
        rep.add(c3);
    }

    // monotone growth of the scalar factor at the sample offsets
    {
        bool mono = true;
        for (Parity e1 = 0; e1 <= 1; ++e1) {
            double prev = -1.0;
            for (double x : {0.0, 0.5, 1.0, 2.0}) {
                const double v = plancherel_density_principal(x, 0.0, e1, 0);
                mono = mono && v >= prev;
                prev = v;
            }
        }
        CaseRecord c;
        c.key = "monotone";
        c.desc = "density factor nondecreasing over |s1-s2| in {0, 0.5, 1, 2}";
        c.pass = mono;
        rep.add(c);
    }

    // discrete series rows n = 1..5: exactly n/(8 pi^3)
    for (int nn = 1; nn <= 5; ++nn) {
        const double v = plancherel_density_discrete(DiscreteParam{nn, 0.3, 0});
        const double expect = nn / (8.0 * kPi * kPi * kPi);
        CaseRecord c;
        c.key = "discrete_n" + std::to_string(nn);
        c.desc = "discrete density n/(8 pi^3), n=" + std::to_string(nn);
        c.lhs = Cplx(v, 0.0);
        c.rhs = Cplx(expect, 0.0);
        c.abs_err = std::abs(v - expect);
        c.pass = v == expect;
        rep.add(c);
    }

    // negative control: the tanh class must NOT reproduce the coth limit
    {
        const double v = plancherel_density_principal(1.0, 1.0, 0, 0);
        const double wrong = 1.0 / (8.0 * kPi * kPi * kPi * kPi);
        CaseRecord c = make_case("zcontrol", "tanh-class limit claimed equal to 1/(8 pi^4) [must fail]",
                                 Cplx(v, 0.0), Cplx(wrong, 0.0), 0.0, cfg.tol_density_limit);
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
