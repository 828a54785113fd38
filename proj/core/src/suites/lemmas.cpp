#include <chrono>
#include <memory>
#include <sstream>

#include "gl2/suites.hpp"
#include "gl2/principal.hpp"

namespace gl2 {

namespace {

// derivative part of e32 F evaluated at the chart point
Cplx g_term(const TestFunction& F, const MatrixPoint& X) {
    const auto g = F.partials(X);
    return -(X.x11 * X.x21 * g[0] + X.x11 * X.x22 * g[1] + X.x21 * X.x21 * g[2] +
             X.x21 * X.x22 * g[3]);
}

struct LemmaCase {
    size_t fam_idx;
    int id;  // 1..4
    double t, s;
    bool negative_control = false;
};

}  // namespace

SuiteReport suite_lemmas(const SuiteConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.name = "lemmas";

    std::vector<TestFunction> Fs;
    for (const auto& d : cfg.test_functions) Fs.emplace_back(BumpBox(d.center, d.radii));

    struct FamSlot {
        size_t fi;
        PrincipalParam p;
        std::unique_ptr<KernelFamily> fam;
    };
    std::vector<FamSlot> fams;
    const PanelRule kernel_rule{cfg.kernel_order, cfg.kernel_panels, true};
    for (size_t fi = 0; fi < Fs.size(); ++fi)
        for (const auto& mu : cfg.mu_samples)
            for (const auto& [e1, e2] : cfg.parities)
                for (const Cplx& sg : cfg.sigma_samples) {
                    FamSlot slot;
                    slot.fi = fi;
                    slot.p = PrincipalParam{mu.mu1, e1, mu.mu2, e2, sg};
                    slot.fam = std::make_unique<KernelFamily>(Fs[fi], slot.p, cfg.t_max, kernel_rule);
                    fams.push_back(std::move(slot));
                }

    std::vector<LemmaCase> cases;
    for (size_t fa = 0; fa < fams.size(); ++fa)
        for (const auto& [t, s] : cfg.lm_ts)
            for (int id = 1; id <= 4; ++id) cases.push_back({fa, id, t, s, false});
    // negative control: ibp-E14-a with its shifted-kernel term dropped
    cases.push_back({0, 1, cfg.lm_ts.front().first, cfg.lm_ts.front().second, true});

    std::vector<CaseRecord> records(cases.size());
    parallel_cases(cases.size(), cfg.effective_threads(), [&](size_t idx) {
        const LemmaCase& lc = cases[idx];
        const FamSlot& slot = fams[lc.fam_idx];
        const TestFunction& F = Fs[slot.fi];
        const PrincipalParam& p = slot.p;
        const double t = lc.t, s = lc.s;
        const Cplx sigma = p.sigma;

        auto I = [&](const std::function<Cplx(double, double, double, const MatrixPoint&)>& g,
                     bool fine) { return slot.fam->eval_custom(t, s, g, fine); };
        auto d12F = [&F](double, double, double, const MatrixPoint& X) -> Cplx {
            return F.partials(X)[1];
        };
        auto F_v_over_uw = [&F](double u, double v, double w, const MatrixPoint& X) -> Cplx {
            const double f = F.eval(X);
            return f == 0.0 ? Cplx{0.0, 0.0} : Cplx{f * v / (u * w), 0.0};
        };
        auto vF = [&F](double, double v, double, const MatrixPoint& X) -> Cplx {
            return F.eval(X) * v;
        };
        auto eq3_integrand = [&](double u, double v, double w, const MatrixPoint& X) -> Cplx {
            const auto g = F.partials(X);
            const Cplx dFdt = -v * g[0] - (w + s * v) * g[1];
            return g_term(F, X) + (-1.0 + sigma) * v * F.eval(X) - u * dFdt;
        };
        auto eq4_integrand = [&](double u, double v, double w, const MatrixPoint& X) -> Cplx {
            const auto g = F.partials(X);
            const Cplx dFds = (u - v * t) * g[1] + v * g[3];
            return g_term(F, X) + (-1.0 + sigma) * v * F.eval(X) + w * dFds;
        };

        Cplx lhs_c, lhs_f, rhs_c, rhs_f;
        std::string desc;
        switch (lc.id) {
            case 1: {
                desc = "ibp-E14-a  I[d12 F] - d/ds V1^- K = (-3/2+mu2) I[F v/(uw)]";
                const double drop = lc.negative_control ? 0.0 : 1.0;
                lhs_c = I(d12F, false) - drop * slot.fam->eval(t, s, -1, 0, KernelDeriv::Ds, false);
                lhs_f = I(d12F, true) - drop * slot.fam->eval(t, s, -1, 0, KernelDeriv::Ds, true);
                rhs_c = (-1.5 + p.mu2) * I(F_v_over_uw, false);
                rhs_f = (-1.5 + p.mu2) * I(F_v_over_uw, true);
                break;
            }
            case 2: {
                desc = "ibp-E14-b  I[d12 F] + d/dt V2^- K = (-3/2+mu1) I[F v/(uw)]";
                lhs_c = I(d12F, false) + slot.fam->eval(t, s, 0, -1, KernelDeriv::Dt, false);
                lhs_f = I(d12F, true) + slot.fam->eval(t, s, 0, -1, KernelDeriv::Dt, true);
                rhs_c = (-1.5 + p.mu1) * I(F_v_over_uw, false);
                rhs_f = (-1.5 + p.mu1) * I(F_v_over_uw, true);
                break;
            }
            case 3: {
                desc = "ibp-E32-a  I[G + (-1+sigma) v F - u dF/dt] = (1/2+mu2+sigma) I[v F]";
                lhs_c = I(eq3_integrand, false);
                lhs_f = I(eq3_integrand, true);
                rhs_c = (0.5 + p.mu2 + sigma) * I(vF, false);
                rhs_f = (0.5 + p.mu2 + sigma) * I(vF, true);
                break;
            }
            default: {
                desc = "ibp-E32-b  I[G + (-1+sigma) v F + w dF/ds] = (1/2+mu1+sigma) I[v F]";
                lhs_c = I(eq4_integrand, false);
                lhs_f = I(eq4_integrand, true);
                rhs_c = (0.5 + p.mu1 + sigma) * I(vF, false);
                rhs_f = (0.5 + p.mu1 + sigma) * I(vF, true);
                break;
            }
        }
        const double err_est = std::abs(lhs_f - lhs_c) + std::abs(rhs_f - rhs_c);

        std::ostringstream key;
        key << "ibp" << lc.id << "|fam" << lc.fam_idx << "|t" << t << "|s" << s
            << (lc.negative_control ? "|control" : "");
        CaseRecord c = make_case(key.str(), desc, lhs_f, rhs_f, err_est, cfg.tol_lemmas);
        if (lc.negative_control) {
            c.desc += " [corrupted: shifted-kernel term dropped; must fail]";
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
