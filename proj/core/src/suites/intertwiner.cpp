#include <chrono>
#include <random>
#include <sstream>

#include "gl2/principal.hpp"
#include "gl2/suites.hpp"

namespace gl2 {

namespace {

// preimage of [lo, hi] under the Moebius map s -> (x12 + s x22)/(x11 + s x21);
// valid for X near the identity (no pole of the inverse inside [lo, hi])
Interval moebius_preimage(const MatrixPoint& X, double lo, double hi) {
    auto inv = [&X](double y) {
        const double den = y * X.x21 - X.x22;
        if (den == 0.0) throw PoleError("moebius_preimage: pole hit");
        return (X.x12 - y * X.x11) / den;
    };
    const double a = inv(lo), b = inv(hi);
    if (X.x21 != 0.0) {
        const double pole = X.x22 / X.x21;
        if (pole >= lo && pole <= hi)
            throw PoleError("moebius_preimage: inverse map has a pole inside the interval");
    }
    return {std::min(a, b), std::max(a, b)};
}

}  // namespace

SuiteReport suite_intertwiner(const SuiteConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.name = "intertwiner";

    const Section phi = bump_section(cfg.section_center, cfg.section_halfwidth);

    // X samples near the identity, deterministic from the seed
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<MatrixPoint> Xs;
    for (int n = 0; n < 2; ++n) {
        MatrixPoint X = MatrixPoint::identity();
        X.x11 += 0.05 * unif(rng);
        X.x12 += 0.05 * unif(rng);
        X.x21 += 0.05 * unif(rng);
        X.x22 += 0.05 * unif(rng);
        Xs.push_back(X);
    }

    struct IwCase {
        size_t mi, pi, xi, ti;
        bool negative_control = false;
    };
    const std::vector<std::pair<Parity, Parity>> parity_classes = {{0, 0}, {1, 0}};
    std::vector<IwCase> cases;
    for (size_t mi = 0; mi < cfg.iw_mu.size(); ++mi)
        for (size_t pi = 0; pi < parity_classes.size(); ++pi)
            for (size_t xi = 0; xi < Xs.size(); ++xi)
                for (size_t ti = 0; ti < cfg.iw_t.size(); ++ti)
                    cases.push_back({mi, pi, xi, ti, false});
    cases.push_back({0, 0, 0, 0, true});

    std::vector<CaseRecord> records(cases.size());
    parallel_cases(cases.size(), cfg.effective_threads(), [&](size_t idx) {
        const IwCase& ic = cases[idx];
        const auto& mu = cfg.iw_mu[ic.mi];
        const auto& [e1, e2] = parity_classes[ic.pi];
        const MatrixPoint& X = Xs[ic.xi];
        const double t = cfg.iw_t[ic.ti];
        const PrincipalParam p{mu.mu1, e1, mu.mu2, e2};
        // parameters of T transposed by A; the corrupted control skips the swap
        const PrincipalParam p_swap = ic.negative_control
                                          ? p
                                          : PrincipalParam{mu.mu2, e2, mu.mu1, e1};

        auto run = [&](int order) -> std::pair<Cplx, Cplx> {
            // LHS: A applied to T(X) phi, evaluated at t
            Section g;
            g.value = [&p, &X, &phi](double s) { return apply_T(p, X, phi, s); };
            const Interval supp =
                moebius_preimage(X, phi.support_lo, phi.support_hi);
            g.support_lo = supp.lo;
            g.support_hi = supp.hi;
            const Cplx lhs = intertwiner_A(p, g, t, order);
            // RHS: T'(X) applied to A phi, evaluated at t
            const double u = X.x11 + t * X.x21;
            if (u == 0.0) throw PoleError("intertwiner suite: cocycle pole");
            const double arg = (X.x12 + t * X.x22) / u;
            const Cplx rhs = intertwiner_A(p, phi, arg, order) *
                             power_r(u, -1.0 + p_swap.mu1 - p_swap.mu2,
                                     parity_add(p_swap.eps1, p_swap.eps2)) *
                             power_r(X.det(), 0.5 + p_swap.mu2, p_swap.eps2);
            return {lhs, rhs};
        };
        const auto [lhs_c, rhs_c] = run(cfg.singular_order);
        const auto [lhs_f, rhs_f] = run(cfg.singular_order + 8);
        const double err_est = std::abs(lhs_f - lhs_c) + std::abs(rhs_f - rhs_c);

        std::ostringstream key;
        key << "mu" << ic.mi << "|eps" << e1 << e2 << "|X" << ic.xi << "|t" << ic.ti
            << (ic.negative_control ? "|control" : "");
        std::ostringstream desc;
        desc << "A T(X) phi = T'(X) A phi at t=" << t << " (mu1-mu2="
             << format_complex(mu.mu1 - mu.mu2) << ")";
        CaseRecord c = make_case(key.str(), desc.str(), lhs_f, rhs_f, err_est,
                                 cfg.tol_intertwiner);
        if (ic.negative_control) {
            c.desc += " [corrupted: parameters not transposed; must fail]";
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
