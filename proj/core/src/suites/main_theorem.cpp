#include <chrono>
#include <memory>
#include <sstream>

#include "gl2/diffop.hpp"
#include "gl2/shiftop.hpp"
#include "gl2/suites.hpp"

namespace gl2 {

namespace {

bool is_diagonal_block(int k, int l) { return (k <= 2 && l <= 2) || (k >= 3 && l >= 3); }

struct MtCase {
    size_t fam_idx;
    int k, l;
    double t, s;
    bool negative_control = false;
};

}  // namespace

SuiteReport suite_main_theorem(const SuiteConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.name = "main-theorem";

    std::vector<TestFunction> Fs;
    for (const auto& d : cfg.test_functions) Fs.emplace_back(BumpBox(d.center, d.radii));

    const ETable table = generate_E_table();
    std::array<std::array<DiffOp2, 4>, 4> e;
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) e[size_t(k - 1)][size_t(l - 1)] = gl4_generator(k, l);

    // one kernel family per (F, mu, eps, sigma); the per-family cache is
    // shared by all sixteen generators and both refinement levels
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

    std::vector<MtCase> cases;
    for (size_t fa = 0; fa < fams.size(); ++fa)
        for (const auto& [t, s] : cfg.mt_ts)
            for (int k = 1; k <= 4; ++k)
                for (int l = 1; l <= 4; ++l) cases.push_back({fa, k, l, t, s, false});
    // negative control: E14 with the sign between its summands flipped
    cases.push_back({0, 1, 4, cfg.mt_ts.front().first, cfg.mt_ts.front().second, true});

    const DiffDiffOp e14_seed = E_seed(1, 4);
    DiffDiffOp e14_corrupted;
    for (const auto& [key, coef] : e14_seed.terms())
        e14_corrupted.add_term(key, key.k == -1 ? -coef : coef);

    std::vector<CaseRecord> records(cases.size());
    parallel_cases(cases.size(), cfg.effective_threads(), [&](size_t idx) {
        const MtCase& mc = cases[idx];
        const FamSlot& slot = fams[mc.fam_idx];
        const TestFunction& F = Fs[slot.fi];
        const Cplx sigma = slot.p.sigma;

        const CompiledMatrixOp ekl{e[size_t(mc.k - 1)][size_t(mc.l - 1)], sigma};
        auto lhs_integrand = [&](double, double, double, const MatrixPoint& X) -> Cplx {
            return ekl.apply(F, X);
        };
        const Cplx lhs_coarse = slot.fam->eval_custom(mc.t, mc.s, lhs_integrand, false);
        const Cplx lhs_fine = slot.fam->eval_custom(mc.t, mc.s, lhs_integrand, true);

        const DiffDiffOp& Ekl =
            mc.negative_control ? e14_corrupted : table.at(mc.k, mc.l);
        const Cplx rhs_coarse = apply_diffdiff(Ekl, *slot.fam, mc.t, mc.s, false);
        const Cplx rhs_fine = apply_diffdiff(Ekl, *slot.fam, mc.t, mc.s, true);

        const double err_est = std::abs(lhs_fine - lhs_coarse) + std::abs(rhs_fine - rhs_coarse);
        const double tol = is_diagonal_block(mc.k, mc.l) ? cfg.tol_main_diag : cfg.tol_main;

        std::ostringstream key;
        key << "E" << mc.k << mc.l << "|fam" << mc.fam_idx << "|t" << mc.t << "|s" << mc.s
            << (mc.negative_control ? "|control" : "");
        std::ostringstream desc;
        desc << "kernel of T(e" << mc.k << mc.l << " F) vs E" << mc.k << mc.l << " K";
        CaseRecord c = make_case(key.str(), desc.str(), lhs_fine, rhs_fine, err_est, tol);
        if (mc.negative_control) {
            c.desc += " [corrupted: second summand sign flipped; must fail]";
            c.negative_control = true;
            c.pass = !c.pass;
        }
        records[idx] = std::move(c);
    });

    for (auto& c : records) rep.add(std::move(c));

    // The printed E24 disagrees with the bracket-regenerated one; record the
    // numeric residual of the printed entry for the report.
    {
        const FamSlot& slot = fams[0];
        const CompiledMatrixOp e24{e[1][3], slot.p.sigma};
        auto lhs_integrand = [&](double, double, double, const MatrixPoint& X) -> Cplx {
            return e24.apply(Fs[slot.fi], X);
        };
        const double t = cfg.mt_ts.front().first, s = cfg.mt_ts.front().second;
        const Cplx lhs = slot.fam->eval_custom(t, s, lhs_integrand, true);
        const Cplx rhs_printed = apply_diffdiff(E_printed(2, 4), *slot.fam, t, s, true);
        const Cplx rhs_regen = apply_diffdiff(table.at(2, 4), *slot.fam, t, s, true);
        std::ostringstream note;
        note << "printed E24 residual " << std::abs(lhs - rhs_printed) << " vs regenerated "
             << std::abs(lhs - rhs_regen) << " at (t,s)=(" << t << "," << s << ")";
        rep.notes.push_back(note.str());
    }

    rep.finalize();
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
}

}  // namespace gl2
