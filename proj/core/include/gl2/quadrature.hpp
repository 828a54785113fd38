#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "gl2/errors.hpp"
#include "gl2/interval.hpp"
#include "gl2/scalars.hpp"

namespace gl2 {

// Tensor Gauss-Legendre panel rule: `order` points per axis per panel,
// `panels` equal subdivisions per axis.  When `refine` is set the integral is
// also evaluated at order+4 and the difference is reported as the
// a-posteriori error (the refined value is returned).  A positive
// `tolerance` turns a disagreement beyond tolerance*(1+|value|) into a
// QuadratureStallError.
struct PanelRule {
    int order = 16;
    int panels = 1;
    bool refine = true;
    double tolerance = 0.0;

    PanelRule() = default;
    PanelRule(int o, int p, bool r = true, double tol = 0.0)
        : order(o), panels(p), refine(r), tolerance(tol) {}
    PanelRule with_order(int o) const { return {o, panels, refine, tolerance}; }
};

struct IntegralResult {
    Cplx value{0.0, 0.0};
    double error = 0.0;
};

// Nodes/weights of the n-point Gauss-Legendre rule on [-1, 1]; cached.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
const GaussRule& gauss_legendre(int n);

// Panel abscissas and weights on [lo, hi] (order*panels points).
void panel_nodes(double lo, double hi, int order, int panels, std::vector<double>& nodes,
                 std::vector<double>& weights);

namespace detail {

template <class Term>
Cplx pairwise_sum(const Term& term, long begin, long end) {
    const long n = end - begin;
    if (n <= 16) {
        Cplx s{0.0, 0.0};
        for (long i = begin; i < end; ++i) s += term(i);
        return s;
    }
    const long mid = begin + n / 2;
    return pairwise_sum(term, begin, mid) + pairwise_sum(term, mid, end);
}

// One tensor-product pass at a fixed order.  The integrand receives the
// point coordinates and the per-axis node indices (so callers can look up
// precomputed per-axis tables).
template <class F>
Cplx tensor_pass(F&& f, std::span<const Interval> box, int order, int panels) {
    const int d = int(box.size());
    std::array<std::vector<double>, 4> nodes, weights;
    std::array<long, 4> npts{}, stride{};
    long total = 1;
    for (int k = 0; k < d; ++k) {
        panel_nodes(box[size_t(k)].lo, box[size_t(k)].hi, order, panels, nodes[size_t(k)],
                    weights[size_t(k)]);
        npts[size_t(k)] = long(nodes[size_t(k)].size());
        total *= npts[size_t(k)];
    }
    long acc = 1;
    for (int k = d - 1; k >= 0; --k) {
        stride[size_t(k)] = acc;
        acc *= npts[size_t(k)];
    }
    auto term = [&](long flat) -> Cplx {
        std::array<double, 4> x{};
        std::array<int, 4> ix{};
        double wt = 1.0;
        for (int k = 0; k < d; ++k) {
            const long i = (flat / stride[size_t(k)]) % npts[size_t(k)];
            ix[size_t(k)] = int(i);
            x[size_t(k)] = nodes[size_t(k)][size_t(i)];
            wt *= weights[size_t(k)][size_t(i)];
        }
        return wt * f(x.data(), ix.data());
    };
    return pairwise_sum(term, 0, total);
}

}  // namespace detail

// Tensor Gauss-Legendre panel quadrature over a d-dimensional rectangle,
// d in {1, ..., 4}.  Integrand signature: Cplx f(const double* x, const int* ix).
template <class F>
IntegralResult integrate_box(F&& f, std::span<const Interval> box, const PanelRule& rule) {
    if (rule.order < 2) throw DomainError("PanelRule: order must be >= 2");
    if (rule.panels < 1) throw DomainError("PanelRule: panels must be >= 1");
    if (box.empty() || box.size() > 4) throw DomainError("integrate_box: d must be 1..4");
    const Cplx coarse = detail::tensor_pass(f, box, rule.order, rule.panels);
    if (!rule.refine) return {coarse, 0.0};
    const Cplx fine = detail::tensor_pass(f, box, rule.order + 4, rule.panels);
    const double err = std::abs(fine - coarse);
    if (rule.tolerance > 0.0 && err > rule.tolerance * (1.0 + std::abs(fine)))
        throw QuadratureStallError("integrate_box: refinement stalled");
    return {fine, err};
}

// Convenience adapter for integrands that ignore the node indices.
template <class F>
IntegralResult integrate_box_fn(F&& f, std::span<const Interval> box, const PanelRule& rule) {
    auto g = [&f](const double* x, const int*) { return f(x); };
    return integrate_box(g, box, rule);
}

// Integral over [a, b] of power_r(t - s, beta // eps) * f(s) ds where f is
// smooth and the algebraic singularity sits at s = t (inside or outside the
// interval).  Requires Re(beta) > -1.  The singular side is removed with the
// substitution |s - t| = tau^m, m = ceil(1/(1+Re beta)), and the remaining
// (possibly log-oscillatory, when Im beta != 0) endpoint is handled by
// geometrically graded panels.
template <class F>
Cplx integrate_singular_1d(F&& f, Cplx beta, Parity eps, double t, double a, double b,
                           int order = 16) {
    if (!(beta.real() > -1.0))
        throw DomainError("integrate_singular_1d: requires Re(exponent) > -1");
    if (a > b) std::swap(a, b);
    const double alpha = beta.real();
    const int m = alpha >= 0.0 ? 1 : std::min(12, int(std::ceil(1.0 / (1.0 + alpha) - 1e-12)));
    const Cplx eta = double(m) * (beta + 1.0) - 1.0;  // Re(eta) >= 0

    // integral over tau in [0, T] of m * tau^eta * f(t + side*tau^m) dtau
    auto one_side = [&](double len, double side) -> Cplx {
        if (len <= 0.0) return {0.0, 0.0};
        const double T = std::pow(len, 1.0 / m);
        const GaussRule& gr = gauss_legendre(order);
        Cplx total{0.0, 0.0};
        double hi = T;
        const int kLevels = 60;
        for (int lev = 0; lev < kLevels && hi > 0.0; ++lev) {
            const double lo = (lev + 1 == kLevels) ? 0.0 : hi * 0.5;
            const double c = 0.5 * (hi + lo), h = 0.5 * (hi - lo);
            Cplx panel{0.0, 0.0};
            for (size_t i = 0; i < gr.x.size(); ++i) {
                const double tau = c + h * gr.x[i];
                if (tau <= 0.0) continue;
                const Cplx weight = std::exp(eta * std::log(tau));
                panel += gr.w[i] * weight * f(t + side * std::pow(tau, double(m)));
            }
            total += double(m) * h * panel;
            hi = lo;
        }
        return total;
    };

    // s > t piece: t - s < 0, so power_r contributes |s-t|^beta * (-1)^eps.
    Cplx above{0.0, 0.0};
    if (b > t) {
        above = (t >= a) ? one_side(b - t, +1.0)
                         : one_side(b - t, +1.0) - one_side(a - t, +1.0);
    }
    Cplx below{0.0, 0.0};
    if (t > a) {
        below = (t <= b) ? one_side(t - a, -1.0)
                         : one_side(t - a, -1.0) - one_side(t - b, -1.0);
    }
    const double sgn = (eps & 1) ? -1.0 : 1.0;
    return sgn * above + below;
}

// Deterministic low-discrepancy rule (6-d Sobol sequence) with randomized
// digital-shift replicates for the error estimate.
struct QmcRule {
    long points = 1L << 18;
    int replicates = 8;
    std::uint64_t seed = 1;

    QmcRule() = default;
    QmcRule(long n, int reps, std::uint64_t s) : points(n), replicates(reps), seed(s) {}
};

struct QmcResult {
    Cplx value{0.0, 0.0};
    double std_error = 0.0;
};

// Fills `pts` with `n` Sobol points in [0,1)^6, XOR-shifted by `shift`.
void sobol6_points(long n, const std::array<std::uint32_t, 6>& shift,
                   std::vector<std::array<double, 6>>& pts);

std::array<std::uint32_t, 6> qmc_digital_shift(std::uint64_t seed, int replicate);

// QMC integration over a 6-d rectangle.  Value is the mean of the replicate
// estimates; std_error the sample standard error across replicates.
template <class F>
QmcResult qmc_integrate(F&& f, std::span<const Interval> box, const QmcRule& rule) {
    if (box.size() != 6) throw DomainError("qmc_integrate: d must be 6");
    if (rule.points < (1L << 10)) throw DomainError("QmcRule: point_count must be >= 2^10");
    if (rule.replicates < 2) throw DomainError("QmcRule: need >= 2 replicates");
    double vol = 1.0;
    for (const Interval& iv : box) vol *= iv.width();
    std::vector<Cplx> estimates(size_t(rule.replicates));
    std::vector<std::array<double, 6>> pts;
    for (int r = 0; r < rule.replicates; ++r) {
        sobol6_points(rule.points, qmc_digital_shift(rule.seed, r), pts);
        // blocked pairwise accumulation
        std::vector<Cplx> blocks;
        Cplx acc{0.0, 0.0};
        long in_block = 0;
        for (long i = 0; i < rule.points; ++i) {
            std::array<double, 6> x;
            for (int k = 0; k < 6; ++k)
                x[size_t(k)] = box[size_t(k)].lo + box[size_t(k)].width() * pts[size_t(i)][size_t(k)];
            acc += f(x.data());
            if (++in_block == 1024) {
                blocks.push_back(acc);
                acc = {0.0, 0.0};
                in_block = 0;
            }
        }
        if (in_block) blocks.push_back(acc);
        auto term = [&](long i) { return blocks[size_t(i)]; };
        estimates[size_t(r)] = detail::pairwise_sum(term, 0, long(blocks.size())) *
                               (vol / double(rule.points));
    }
    Cplx mean{0.0, 0.0};
    for (const Cplx& e : estimates) mean += e;
    mean /= double(rule.replicates);
    double var = 0.0;
    for (const Cplx& e : estimates) var += std::norm(e - mean);
    var /= double(rule.replicates - 1);
    return {mean, std::sqrt(var / rule.replicates)};
}

}  // namespace gl2
