#include <chrono>
#include <sstream>

#include "gl2/principal.hpp"
#include "gl2/suites.hpp"

namespace gl2 {

namespace {

struct OracleCase {
    size_t fi, mi, pi, ti;
    bool negative_control = false;
};

// RHS of the lemma: integral over s of K(t, s) phi(s), restricted to the
// certified s-support of the kernel (outside it K vanishes identically).
Cplx oracle_rhs(const KernelFamily& fam, const Section& phi, double t, int s_order, int s_panels,
                bool fine) {
    const Interval s_range = kernel_s_support(fam.test_function(), t);
    if (s_range.hi <= phi.support_lo || s_range.lo >= phi.support_hi) return {0.0, 0.0};
    const Interval supp{std::max(phi.support_lo, s_range.lo),
                        std::min(phi.support_hi, s_range.hi)};
    auto integrand = [&](const double* x, const int*) -> Cplx {
        const Cplx pv = phi(x[0]);
        if (pv == Cplx(0.0, 0.0)) return {0.0, 0.0};
        return fam.eval(t, x[0], 0, 0, KernelDeriv::None, fine) * pv;
    };
    PanelRule rule{fine ? s_order + 4 : s_order, s_panels, false};
    return integrate_box(integrand, std::span<const Interval>(&supp, 1), rule).value;
}

}  // namespace

SuiteReport suite_kernel_oracle(const SuiteConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.name = "kernel-oracle";

    std::vector<TestFunction> Fs;
    for (const auto& d : cfg.test_functions) Fs.emplace_back(BumpBox(d.center, d.radii));
    const Section phi = bump_section(cfg.section_center, cfg.section_halfwidth);
    const Cplx sigma = cfg.sigma_samples.empty() ? Cplx{0.0, 0.0} : cfg.sigma_samples[0];

    std::vector<OracleCase> cases;
    for (size_t fi = 0; fi < Fs.size(); ++fi)
        for (size_t mi = 0; mi < cfg.mu_samples.size(); ++mi)
            for (size_t pi = 0; pi < cfg.parities.size(); ++pi)
                for (size_t ti = 0; ti < cfg.ko_t.size(); ++ti)
                    cases.push_back({fi, mi, pi, ti, false});
    // negative control: the kernel side is evaluated at a mismatched mu1,
    // at a t where the transform is well away from zero
    const size_t control_t = cfg.ko_t.size() / 2;
    cases.push_back({0, 0, 0, control_t, true});

    std::vector<CaseRecord> records(cases.size());
    const PanelRule direct_rule{cfg.direct_order, cfg.direct_panels, true};
    const PanelRule kernel_rule{cfg.oracle_kernel_order, cfg.kernel_panels, true};

    parallel_cases(cases.size(), cfg.effective_threads(), [&](size_t idx) {
        const OracleCase& oc = cases[idx];
        const auto& mu = cfg.mu_samples[oc.mi];
        const auto& [e1, e2] = cfg.parities[oc.pi];
        const double t = cfg.ko_t[oc.ti];
        PrincipalParam p{mu.mu1, e1, mu.mu2, e2, sigma};
        PrincipalParam p_kernel = p;
        if (oc.negative_control) p_kernel.mu1 += Cplx{1.0, 3.0};

        const IntegralResult lhs = fourier_direct(Fs[oc.fi], p, phi, t, direct_rule);
        KernelFamily fam(Fs[oc.fi], p_kernel, cfg.t_max, kernel_rule);
        const Cplx rhs_coarse =
            oracle_rhs(fam, phi, t, cfg.oracle_s_order, cfg.oracle_s_panels, false);
        const Cplx rhs_fine = oracle_rhs(fam, phi, t, cfg.oracle_s_order, cfg.oracle_s_panels, true);
        const double err_est = lhs.error + std::abs(rhs_fine - rhs_coarse);

        std::ostringstream key;
        key << "F" << oc.fi << "|mu" << oc.mi << "|eps" << e1 << e2 << "|t" << oc.ti
            << (oc.negative_control ? "|control" : "");
        std::ostringstream desc;
        desc << "fourier_direct vs int K(t,s)phi(s)ds at t=" << t;
        CaseRecord c = make_case(key.str(), desc.str(), lhs.value, rhs_fine, err_est,
                                 cfg.tol_kernel_oracle);
        if (oc.negative_control) {
            c.desc += " [corrupted: kernel side at mu1+1+3i; must fail]";
            c.negative_control = true;
            c.pass = !c.pass;
        }
        records[idx] = std::move(c);
    });

    for (auto& c : records) rep.add(std::move(c));
    rep.finalize();
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
}

}  // namespace gl2
