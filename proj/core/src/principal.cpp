#include "gl2/principal.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>

namespace gl2 {

PrincipalParam::PrincipalParam(Cplx m1, Parity e1, Cplx m2, Parity e2, Cplx sg)
    : mu1(m1), mu2(m2), eps1(e1 & 1), eps2(e2 & 1), sigma(sg) {}

PrincipalParam PrincipalParam::shifted(int j, int k) const {
    PrincipalParam q = *this;
    q.mu1 += double(j);
    q.mu2 += double(k);
    q.eps1 = (q.eps1 + std::abs(j)) & 1;
    q.eps2 = (q.eps2 + std::abs(k)) & 1;
    return q;
}

TemperedParam TemperedParam::principal(double s1, double s2, Parity e1, Parity e2) {
    if (s1 < s2) throw DomainError("TemperedParam: principal branch requires s1 >= s2");
    TemperedParam p;
    p.kind = Kind::Principal;
    p.s1 = s1;
    p.s2 = s2;
    p.eps1 = e1 & 1;
    p.eps2 = e2 & 1;
    return p;
}

TemperedParam TemperedParam::discrete(DiscreteParam d) {
    TemperedParam p;
    p.kind = Kind::Discrete;
    p.disc = d;
    return p;
}

double TemperedParam::plancherel_density() const {
    if (kind == Kind::Principal) return plancherel_density_principal(s1, s2, eps1, eps2);
    return plancherel_density_discrete(disc);
}

Section bump_section(double center, double halfwidth) {
    if (!(halfwidth > 0.0)) throw DomainError("bump_section: halfwidth must be positive");
    Section s;
    s.value = [center, halfwidth](double t) -> Cplx {
        return bump1((t - center) / halfwidth);
    };
    s.deriv = [center, halfwidth](double t) -> Cplx {
        return bump1_deriv((t - center) / halfwidth) / halfwidth;
    };
    s.support_lo = center - halfwidth;
    s.support_hi = center + halfwidth;
    return s;
}

Cplx apply_T(const PrincipalParam& p, const MatrixPoint& X, const Section& phi, double t) {
    const double u = X.x11 + t * X.x21;
    if (u == 0.0) throw PoleError("apply_T: x11 + t*x21 = 0");
    const double num = X.x12 + t * X.x22;
    const Cplx phival = phi(num / u);
    if (phival == Cplx(0.0, 0.0)) return {0.0, 0.0};
    return phival * power_r(u, -1.0 + p.mu1 - p.mu2, parity_add(p.eps1, p.eps2)) *
           power_r(X.det(), 0.5 + p.mu2, p.eps2);
}

Cplx apply_L(const PrincipalParam& p, int i, int j, const Section& phi, double t) {
    if (!phi.deriv) throw DomainError("apply_L: section has no derivative");
    const Cplx f = phi(t);
    const Cplx fp = phi.deriv(t);
    if (i == 1 && j == 1) return -t * fp + (-0.5 + p.mu1) * f;
    if (i == 1 && j == 2) return fp;
    if (i == 2 && j == 1) return -t * t * fp + t * (-1.0 + p.mu1 - p.mu2) * f;
    if (i == 2 && j == 2) return t * fp + (0.5 + p.mu2) * f;
    throw DomainError("apply_L: index out of range");
}

IntegralResult fourier_direct(const TestFunction& F, const PrincipalParam& p, const Section& phi,
                              double t, const PanelRule& rule) {
    certify_window(F, std::abs(t));  // throws when the window is not certifiable
    const BumpBox& box = F.box();
    const std::array<Interval, 4> b = {box.entry_interval(0), box.entry_interval(1),
                                       box.entry_interval(2), box.entry_interval(3)};
    // Per-axis bump tables at both quadrature orders would complicate the
    // callback; the direct product structure keeps per-point work small.
    auto integrand = [&](const double* x, const int*) -> Cplx {
        const MatrixPoint X{x[0], x[1], x[2], x[3]};
        const double f = F.eval(X);
        if (f == 0.0) return {0.0, 0.0};
        return f * apply_T(p, X, phi, t) * haar_weight(X);
    };
    return integrate_box(integrand, std::span<const Interval>(b.data(), 4), rule);
}

KernelFamily::KernelFamily(const TestFunction& F, const PrincipalParam& p, double t_max,
                           const PanelRule& rule)
    : F_(F), param_(p), cert_(certify_window(F, t_max)), rule_(rule) {}

namespace {
std::string cache_key(double t, double s, int j, int k, KernelDeriv d, int order) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g|%.17g|%d|%d|%d|%d", t, s, j, k, int(d), order);
    return buf;
}

std::vector<double> nodes_only(const Interval& iv, int order, int panels) {
    std::vector<double> n, w;
    panel_nodes(iv.lo, iv.hi, order, panels, n, w);
    return n;
}
}  // namespace

// The certified hull keeps u and w sign-definite over the whole window, but
// its w extent is several times the support slice at one (t, s), which
// starves the tensor rule of resolution.  The integration box is therefore
// recomputed per evaluation point as the support enclosure over a small
// (t, s)-margin, intersected with the hull: derivatives in t and s still
// commute with the quadrature (the integrand support stays strictly
// interior for nearby t, s), and the sign certificates carry over.
namespace {
constexpr double kChartBoxMargin = 0.05;
}

std::array<Interval, 3> KernelFamily::chart_box(double t, double s) const {
    const BumpBox& bb = F_.box();
    const Interval x11 = bb.entry_interval(0);
    const Interval x21 = bb.entry_interval(2);
    const Interval x22 = bb.entry_interval(3);
    const Interval tt{t - kChartBoxMargin, t + kChartBoxMargin};
    const Interval ss{s - kChartBoxMargin, s + kChartBoxMargin};
    const Interval u = intersect(x11 + tt * x21, cert_.u);
    const Interval w = intersect(x22 - ss * x21, cert_.w);
    return {u, x21, w};
}

Cplx KernelFamily::integrate(double t, double s, int j, int k, KernelDeriv d, int order) const {
    const std::array<Interval, 3> box = chart_box(t, s);
    const SignedExponent eu{-1.5 + param_.mu1 + double(j), parity_add(param_.eps1, j & 1)};
    const SignedExponent ew{-1.5 + param_.mu2 + double(k), parity_add(param_.eps2, k & 1)};

    const std::vector<double> un = nodes_only(box[0], order, rule_.panels);
    const std::vector<double> wn = nodes_only(box[2], order, rule_.panels);
    std::vector<Cplx> pow_u(un.size()), pow_w(wn.size());
    for (size_t i = 0; i < un.size(); ++i) pow_u[i] = power_r(un[i], eu);
    for (size_t i = 0; i < wn.size(); ++i) pow_w[i] = power_r(wn[i], ew);

    auto integrand = [&](const double* x, const int* ix) -> Cplx {
        const double u = x[0], v = x[1], w = x[2];
        const MatrixPoint X{u - t * v, s * u - s * t * v - t * w, v, s * v + w};
        double fval = 0.0;
        switch (d) {
            case KernelDeriv::None:
                fval = F_.eval(X);
                break;
            case KernelDeriv::Dt: {
                const auto g = F_.partials(X);
                fval = -v * g[0] - (w + s * v) * g[1];
                break;
            }
            case KernelDeriv::Ds: {
                const auto g = F_.partials(X);
                fval = (u - v * t) * g[1] + v * g[3];
                break;
            }
        }
        if (fval == 0.0) return {0.0, 0.0};
        return fval * pow_u[size_t(ix[0])] * pow_w[size_t(ix[2])];
    };
    PanelRule r = rule_.with_order(order);
    r.refine = false;
    return integrate_box(integrand, std::span<const Interval>(box.data(), 3), r).value;
}

Cplx KernelFamily::eval(double t, double s, int j, int k, KernelDeriv d, bool fine) const {
    if (std::abs(t) > cert_.t_max + 1e-12)
        throw CertificationError("KernelFamily: |t| outside the certified window");
    const int order = fine ? rule_.order + 4 : rule_.order;
    if (cache_enabled_) {
        const std::string key = cache_key(t, s, j, k, d, order);
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        const Cplx v = integrate(t, s, j, k, d, order);
        std::lock_guard<std::mutex> lock(cache_mutex_);
        cache_.emplace(key, v);
        return v;
    }
    return integrate(t, s, j, k, d, order);
}

Cplx KernelFamily::eval_custom(
    double t, double s, const std::function<Cplx(double, double, double, const MatrixPoint&)>& g,
    bool fine) const {
    if (std::abs(t) > cert_.t_max + 1e-12)
        throw CertificationError("KernelFamily: |t| outside the certified window");
    const int order = fine ? rule_.order + 4 : rule_.order;
    const std::array<Interval, 3> box = chart_box(t, s);
    const SignedExponent eu{-1.5 + param_.mu1, param_.eps1};
    const SignedExponent ew{-1.5 + param_.mu2, param_.eps2};

    const std::vector<double> un = nodes_only(box[0], order, rule_.panels);
    const std::vector<double> wn = nodes_only(box[2], order, rule_.panels);
    std::vector<Cplx> pow_u(un.size()), pow_w(wn.size());
    for (size_t i = 0; i < un.size(); ++i) pow_u[i] = power_r(un[i], eu);
    for (size_t i = 0; i < wn.size(); ++i) pow_w[i] = power_r(wn[i], ew);

    auto integrand = [&](const double* x, const int* ix) -> Cplx {
        const double u = x[0], v = x[1], w = x[2];
        const MatrixPoint X{u - t * v, s * u - s * t * v - t * w, v, s * v + w};
        const Cplx gv = g(u, v, w, X);
        if (gv == Cplx(0.0, 0.0)) return {0.0, 0.0};
        return gv * pow_u[size_t(ix[0])] * pow_w[size_t(ix[2])];
    };
    PanelRule r = rule_.with_order(order);
    r.refine = false;
    return integrate_box(integrand, std::span<const Interval>(box.data(), 3), r).value;
}

Cplx kernel_K(const TestFunction& F, const PrincipalParam& p, double t, double s, double t_max,
              const PanelRule& rule) {
    return KernelFamily(F, p, t_max, rule).eval(t, s, 0, 0, KernelDeriv::None);
}
Cplx kernel_K_dt(const TestFunction& F, const PrincipalParam& p, double t, double s, double t_max,
                 const PanelRule& rule) {
    return KernelFamily(F, p, t_max, rule).eval(t, s, 0, 0, KernelDeriv::Dt);
}
Cplx kernel_K_ds(const TestFunction& F, const PrincipalParam& p, double t, double s, double t_max,
                 const PanelRule& rule) {
    return KernelFamily(F, p, t_max, rule).eval(t, s, 0, 0, KernelDeriv::Ds);
}
Cplx kernel_shifted(const TestFunction& F, const PrincipalParam& p, double t, double s, int which,
                    int dir, double t_max, const PanelRule& rule) {
    if ((which != 1 && which != 2) || (dir != 1 && dir != -1))
        throw DomainError("kernel_shifted: which in {1,2}, dir in {+1,-1}");
    const int j = which == 1 ? dir : 0;
    const int k = which == 2 ? dir : 0;
    return KernelFamily(F, p, t_max, rule).eval(t, s, j, k, KernelDeriv::None);
}

Interval kernel_s_support(const TestFunction& F, double t) {
    const BumpBox& bb = F.box();
    const Interval u = bb.entry_interval(0) + Interval::point(t) * bb.entry_interval(2);
    if (!u.sign_definite())
        throw CertificationError("kernel_s_support: u not sign-definite at this t");
    return (bb.entry_interval(1) + Interval::point(t) * bb.entry_interval(3)) / u;
}

Cplx intertwiner_A(const PrincipalParam& p, const Section& f, double t, int order) {
    if (!(std::real(p.mu1 - p.mu2) < 0.0))
        throw DomainError("intertwiner_A: requires Re(mu1 - mu2) < 0");
    const Cplx beta = -1.0 - p.mu1 + p.mu2;
    const Parity eps = parity_add(p.eps1, p.eps2);
    auto g = [&f](double s) { return f(s); };
    return integrate_singular_1d(g, beta, eps, t, f.support_lo, f.support_hi, order);
}

}  // namespace gl2
