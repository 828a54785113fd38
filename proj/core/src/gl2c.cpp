#include "gl2/gl2c.hpp"

#include <cmath>

#include "gl2/testfn.hpp"

namespace gl2 {

namespace {
bool exact_integer(Cplx z) {
    return std::abs(z.imag()) <= 1e-9 && std::abs(z.real() - std::round(z.real())) <= 1e-9;
}
}  // namespace

ComplexParam::ComplexParam(Cplx m1, Cplx m1p, Cplx m2, Cplx m2p, Cplx sg, Cplx sgp)
    : mu1(m1), mu1p(m1p), mu2(m2), mu2p(m2p), sigma(sg), sigmap(sgp) {
    if (!exact_integer(mu1 - mu1p) || !exact_integer(mu2 - mu2p))
        throw DomainError("ComplexParam: mu_i - mu_i' must be exact integers");
}

bool ComplexParam::is_tempered(double tol) const {
    return std::abs(std::real(mu1 + mu1p)) <= tol && std::abs(std::real(mu2 + mu2p)) <= tol;
}

ComplexParam ComplexParam::shifted(int which, bool primed, int dir) const {
    ComplexParam q = *this;
    Cplx* field = which == 1 ? (primed ? &q.mu1p : &q.mu1) : (primed ? &q.mu2p : &q.mu2);
    *field += double(dir);
    return q;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    return {a.x11 * b.x11 + a.x12 * b.x21, a.x11 * b.x12 + a.x12 * b.x22,
            a.x21 * b.x11 + a.x22 * b.x21, a.x21 * b.x12 + a.x22 * b.x22};
}

ComplexTestFunction::ComplexTestFunction(CMatrix center, std::array<double, 8> radii)
    : center_(center), radii_(radii) {
    for (double r : radii_)
        if (!(r > 0.0)) throw DomainError("ComplexTestFunction: radii must be positive");
    const CRect d = det_rect();
    if (d.contains_zero())
        throw CertificationError("ComplexTestFunction: support cannot be certified away from det=0");
}

CRect ComplexTestFunction::entry_rect(int k) const {
    const Cplx c = k == 0 ? center_.x11 : k == 1 ? center_.x12 : k == 2 ? center_.x21 : center_.x22;
    const double rr = radii_[size_t(2 * k)], ri = radii_[size_t(2 * k + 1)];
    return {Interval(c.real() - rr, c.real() + rr), Interval(c.imag() - ri, c.imag() + ri)};
}

CRect ComplexTestFunction::det_rect() const {
    return entry_rect(0) * entry_rect(3) - entry_rect(1) * entry_rect(2);
}

double ComplexTestFunction::eval(const CMatrix& X) const {
    const std::array<Cplx, 4> v = {X.x11, X.x12, X.x21, X.x22};
    const std::array<Cplx, 4> c = {center_.x11, center_.x12, center_.x21, center_.x22};
    double f = 1.0;
    for (int k = 0; k < 4; ++k) {
        f *= bump1((v[size_t(k)].real() - c[size_t(k)].real()) / radii_[size_t(2 * k)]);
        if (f == 0.0) return 0.0;
        f *= bump1((v[size_t(k)].imag() - c[size_t(k)].imag()) / radii_[size_t(2 * k + 1)]);
        if (f == 0.0) return 0.0;
    }
    return f;
}

WirtingerData ComplexTestFunction::wirtinger(const CMatrix& X) const {
    const std::array<Cplx, 4> v = {X.x11, X.x12, X.x21, X.x22};
    const std::array<Cplx, 4> c = {center_.x11, center_.x12, center_.x21, center_.x22};
    std::array<double, 4> a{}, b{}, da{}, db{};
    for (int k = 0; k < 4; ++k) {
        const double xr = (v[size_t(k)].real() - c[size_t(k)].real()) / radii_[size_t(2 * k)];
        const double xi = (v[size_t(k)].imag() - c[size_t(k)].imag()) / radii_[size_t(2 * k + 1)];
        a[size_t(k)] = bump1(xr);
        b[size_t(k)] = bump1(xi);
        da[size_t(k)] = bump1_deriv(xr) / radii_[size_t(2 * k)];
        db[size_t(k)] = bump1_deriv(xi) / radii_[size_t(2 * k + 1)];
    }
    WirtingerData w;
    double f = 1.0;
    for (int k = 0; k < 4; ++k) f *= a[size_t(k)] * b[size_t(k)];
    w.f = f;
    for (int k = 0; k < 4; ++k) {
        double rest = 1.0;
        for (int j = 0; j < 4; ++j)
            if (j != k) rest *= a[size_t(j)] * b[size_t(j)];
        const double fx = da[size_t(k)] * b[size_t(k)] * rest;
        const double fy = a[size_t(k)] * db[size_t(k)] * rest;
        w.d[size_t(k)] = 0.5 * Cplx(fx, -fy);
        w.dbar[size_t(k)] = 0.5 * Cplx(fx, fy);
    }
    return w;
}

CSection bump_csection(Cplx center, double halfwidth) {
    if (!(halfwidth > 0.0)) throw DomainError("bump_csection: halfwidth must be positive");
    CSection s;
    s.value = [center, halfwidth](Cplx t) -> Cplx {
        return bump1((t.real() - center.real()) / halfwidth) *
               bump1((t.imag() - center.imag()) / halfwidth);
    };
    s.d = [center, halfwidth](Cplx t) -> Cplx {
        const double xr = (t.real() - center.real()) / halfwidth;
        const double xi = (t.imag() - center.imag()) / halfwidth;
        const double fx = bump1_deriv(xr) * bump1(xi) / halfwidth;
        const double fy = bump1(xr) * bump1_deriv(xi) / halfwidth;
        return 0.5 * Cplx(fx, -fy);
    };
    s.dbar = [center, halfwidth](Cplx t) -> Cplx {
        const double xr = (t.real() - center.real()) / halfwidth;
        const double xi = (t.imag() - center.imag()) / halfwidth;
        const double fx = bump1_deriv(xr) * bump1(xi) / halfwidth;
        const double fy = bump1(xr) * bump1_deriv(xi) / halfwidth;
        return 0.5 * Cplx(fx, fy);
    };
    return s;
}

Cplx apply_T_c(const ComplexParam& p, const CMatrix& X, const CSection& phi, Cplx t) {
    const Cplx u = X.x11 + t * X.x21;
    if (u == Cplx(0.0, 0.0)) throw PoleError("apply_T_c: x11 + t*x21 = 0");
    const Cplx phival = phi((X.x12 + t * X.x22) / u);
    if (phival == Cplx(0.0, 0.0)) return {0.0, 0.0};
    return phival * power_c(u, -1.0 + p.mu1 - p.mu2, -1.0 + p.mu1p - p.mu2p) *
           power_c(X.det(), 0.5 + p.mu2, 0.5 + p.mu2p);
}

Cplx apply_L_c(const ComplexParam& p, int i, int j, bool bar, const CSection& phi, Cplx t) {
    const Cplx f = phi(t);
    if (!bar) {
        const Cplx fp = phi.d(t);
        if (i == 1 && j == 1) return -t * fp + (-0.5 + p.mu1) * f;
        if (i == 1 && j == 2) return fp;
        if (i == 2 && j == 1) return -t * t * fp + t * (-1.0 + p.mu1 - p.mu2) * f;
        if (i == 2 && j == 2) return t * fp + (0.5 + p.mu2) * f;
    } else {
        const Cplx tb = std::conj(t);
        const Cplx fp = phi.dbar(t);
        if (i == 1 && j == 1) return -tb * fp + (-0.5 + p.mu1p) * f;
        if (i == 1 && j == 2) return fp;
        if (i == 2 && j == 1) return -tb * tb * fp + tb * (-1.0 + p.mu1p - p.mu2p) * f;
        if (i == 2 && j == 2) return tb * fp + (0.5 + p.mu2p) * f;
    }
    throw DomainError("apply_L_c: index out of range");
}

ComplexWindow certify_window_c(const ComplexTestFunction& F, Cplx t) {
    ComplexWindow w;
    w.v = F.entry_rect(2);
    w.u = F.entry_rect(0) + cmul(t, F.entry_rect(2));
    if (w.u.abs_lower() <= 0.0)
        throw CertificationError("certify_window_c: |u| cannot be bounded away from 0");
    w.w = F.det_rect() * recip(w.u);
    return w;
}

QmcResult kernel_K_c(const ComplexTestFunction& F, const ComplexParam& p, Cplx t, Cplx s,
                     const QmcRule& rule, CKernelDeriv d, std::array<int, 4> shift) {
    const ComplexWindow win = certify_window_c(F, t);
    const std::array<Interval, 6> box = {win.u.re, win.u.im, win.v.re,
                                         win.v.im, win.w.re, win.w.im};
    const BiExponent eu(-1.5 + p.mu1 + double(shift[0]), -1.5 + p.mu1p + double(shift[1]));
    const BiExponent ew(-1.5 + p.mu2 + double(shift[2]), -1.5 + p.mu2p + double(shift[3]));

    auto integrand = [&](const double* x) -> Cplx {
        const Cplx u{x[0], x[1]}, v{x[2], x[3]}, w{x[4], x[5]};
        const CMatrix X{u - t * v, s * u - s * t * v - t * w, v, s * v + w};
        Cplx fval;
        if (d == CKernelDeriv::None) {
            const double f = F.eval(X);
            if (f == 0.0) return {0.0, 0.0};
            fval = f;
        } else {
            const WirtingerData wd = F.wirtinger(X);
            switch (d) {
                case CKernelDeriv::Dt:
                    fval = -v * wd.d[0] - (w + s * v) * wd.d[1];
                    break;
                case CKernelDeriv::Ds:
                    fval = (u - v * t) * wd.d[1] + v * wd.d[3];
                    break;
                case CKernelDeriv::DtBar:
                    fval = -std::conj(v) * wd.dbar[0] - std::conj(w + s * v) * wd.dbar[1];
                    break;
                default:  // DsBar
                    fval = std::conj(u - v * t) * wd.dbar[1] + std::conj(v) * wd.dbar[3];
                    break;
            }
            if (fval == Cplx(0.0, 0.0)) return {0.0, 0.0};
        }
        return fval * power_c(u, eu) * power_c(w, ew);
    };
    return qmc_integrate(integrand, std::span<const Interval>(box.data(), 6), rule);
}

Cplx apply_e_c(int which, bool bar, const ComplexTestFunction& F, const CMatrix& X, Cplx sigma,
               Cplx sigmap) {
    const WirtingerData w = F.wirtinger(X);
    const Cplx det = X.det();
    if (which == 14) {
        if (!bar) return w.d[1] - (-1.0 + sigma) * (X.x21 / det) * w.f;
        return w.dbar[1] - (-1.0 + sigmap) * std::conj(X.x21 / det) * w.f;
    }
    if (which == 32) {
        if (!bar) {
            Cplx v = X.x11 * X.x21 * w.d[0] + X.x11 * X.x22 * w.d[1] + X.x21 * X.x21 * w.d[2] +
                     X.x21 * X.x22 * w.d[3];
            return -v + (-1.0 + sigma) * X.x21 * w.f;
        }
        Cplx v = std::conj(X.x11 * X.x21) * w.dbar[0] + std::conj(X.x11 * X.x22) * w.dbar[1] +
                 std::conj(X.x21 * X.x21) * w.dbar[2] + std::conj(X.x21 * X.x22) * w.dbar[3];
        return -v + (-1.0 + sigmap) * std::conj(X.x21) * w.f;
    }
    throw DomainError("apply_e_c: which must be 14 or 32");
}

SpotCheck e_spotcheck_c(int which, bool bar, int sign, const ComplexTestFunction& F,
                        const ComplexParam& p, Cplx t, Cplx s, const QmcRule& rule) {
    const Cplx dmu = bar ? (p.mu1p - p.mu2p) : (p.mu1 - p.mu2);
    if (std::abs(dmu) < 1e-9) throw PoleError("e_spotcheck_c: mu1 - mu2 vanishes");

    auto sub_rule = [&rule](int tag) {
        QmcRule r = rule;
        r.seed = rule.seed * 8191 + std::uint64_t(tag) * 131 + 7;
        return r;
    };

    // LHS: kernel of T(e F) at the unshifted parameters.
    const ComplexWindow win = certify_window_c(F, t);
    const std::array<Interval, 6> box = {win.u.re, win.u.im, win.v.re,
                                         win.v.im, win.w.re, win.w.im};
    const BiExponent eu(-1.5 + p.mu1, -1.5 + p.mu1p);
    const BiExponent ew(-1.5 + p.mu2, -1.5 + p.mu2p);
    auto lhs_integrand = [&](const double* x) -> Cplx {
        const Cplx u{x[0], x[1]}, v{x[2], x[3]}, w{x[4], x[5]};
        const CMatrix X{u - t * v, s * u - s * t * v - t * w, v, s * v + w};
        const Cplx ef = apply_e_c(which, bar, F, X, p.sigma, p.sigmap);
        if (ef == Cplx(0.0, 0.0)) return {0.0, 0.0};
        return ef * power_c(u, eu) * power_c(w, ew);
    };
    const QmcResult lhs =
        qmc_integrate(lhs_integrand, std::span<const Interval>(box.data(), 6), sub_rule(1));

    // RHS: the differential-difference side.
    SpotCheck out;
    out.lhs = lhs.value;
    out.lhs_err = lhs.std_error;
    Cplx c1, c2;
    QmcResult r1, r2;
    if (which == 14) {
        if (!bar) {
            c1 = (-0.5 - p.sigma + p.mu1) / dmu;
            c2 = (-0.5 - p.sigma + p.mu2) / dmu;
            r1 = kernel_K_c(F, p, t, s, sub_rule(2), CKernelDeriv::Ds, {-1, 0, 0, 0});
            r2 = kernel_K_c(F, p, t, s, sub_rule(3), CKernelDeriv::Dt, {0, 0, -1, 0});
        } else {
            c1 = (-0.5 - p.sigmap + p.mu1p) / dmu;
            c2 = (-0.5 - p.sigmap + p.mu2p) / dmu;
            r1 = kernel_K_c(F, p, t, s, sub_rule(2), CKernelDeriv::DsBar, {0, -1, 0, 0});
            r2 = kernel_K_c(F, p, t, s, sub_rule(3), CKernelDeriv::DtBar, {0, 0, 0, -1});
        }
    } else if (which == 32) {
        if (!bar) {
            c1 = (0.5 + p.mu1 + p.sigma) / dmu;
            c2 = (0.5 + p.mu2 + p.sigma) / dmu;
            r1 = kernel_K_c(F, p, t, s, sub_rule(2), CKernelDeriv::Dt, {1, 0, 0, 0});
            r2 = kernel_K_c(F, p, t, s, sub_rule(3), CKernelDeriv::Ds, {0, 0, 1, 0});
        } else {
            c1 = (0.5 + p.mu1p + p.sigmap) / dmu;
            c2 = (0.5 + p.mu2p + p.sigmap) / dmu;
            r1 = kernel_K_c(F, p, t, s, sub_rule(2), CKernelDeriv::DtBar, {0, 1, 0, 0});
            r2 = kernel_K_c(F, p, t, s, sub_rule(3), CKernelDeriv::DsBar, {0, 0, 0, 1});
        }
    } else {
        throw DomainError("e_spotcheck_c: which must be 14 or 32");
    }
    out.rhs = c1 * r1.value + double(sign) * c2 * r2.value;
    out.rhs_err = std::hypot(std::abs(c1) * r1.std_error, std::abs(c2) * r2.std_error);
    return out;
}

}  // namespace gl2
