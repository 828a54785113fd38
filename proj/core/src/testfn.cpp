#include "gl2/testfn.hpp"

#include <cmath>
#include <sstream>

namespace gl2 {

MatrixPoint operator*(const MatrixPoint& a, const MatrixPoint& b) {
    return {a.x11 * b.x11 + a.x12 * b.x21, a.x11 * b.x12 + a.x12 * b.x22,
            a.x21 * b.x11 + a.x22 * b.x21, a.x21 * b.x12 + a.x22 * b.x22};
}

double haar_weight(const MatrixPoint& X) {
    const double d = X.det();
    if (d == 0.0) throw DomainError("haar_weight: det X = 0");
    return 1.0 / (d * d);
}

BumpBox::BumpBox(MatrixPoint c, std::array<double, 4> r) : center(c), radii(r) {
    for (double rad : radii)
        if (!(rad > 0.0)) throw DomainError("BumpBox: radii must be positive");
    if (det_interval().contains_zero())
        throw CertificationError("BumpBox: box cannot be certified away from {det = 0}");
}

Interval BumpBox::entry_interval(int k) const {
    const double c = k == 0 ? center.x11 : k == 1 ? center.x12 : k == 2 ? center.x21 : center.x22;
    return {c - radii[size_t(k)], c + radii[size_t(k)]};
}

Interval BumpBox::det_interval() const {
    return entry_interval(0) * entry_interval(3) - entry_interval(1) * entry_interval(2);
}

double bump1(double x) {
    const double q = 1.0 - x * x;
    if (q <= 0.0) return 0.0;
    return std::exp(-1.0 / q);
}

double bump1_deriv(double x) {
    const double q = 1.0 - x * x;
    if (q <= 0.0) return 0.0;
    return std::exp(-1.0 / q) * (-2.0 * x / (q * q));
}

double TestFunction::eval(const MatrixPoint& X) const {
    const std::array<double, 4> v = {X.x11, X.x12, X.x21, X.x22};
    const std::array<double, 4> c = {box_.center.x11, box_.center.x12, box_.center.x21,
                                     box_.center.x22};
    double f = 1.0;
    for (int k = 0; k < 4; ++k) {
        f *= bump1((v[size_t(k)] - c[size_t(k)]) / box_.radii[size_t(k)]);
        if (f == 0.0) return 0.0;
    }
    return f;
}

std::array<double, 4> TestFunction::partials(const MatrixPoint& X) const {
    const std::array<double, 4> v = {X.x11, X.x12, X.x21, X.x22};
    const std::array<double, 4> c = {box_.center.x11, box_.center.x12, box_.center.x21,
                                     box_.center.x22};
    std::array<double, 4> b{}, db{};
    for (int k = 0; k < 4; ++k) {
        const double xi = (v[size_t(k)] - c[size_t(k)]) / box_.radii[size_t(k)];
        b[size_t(k)] = bump1(xi);
        db[size_t(k)] = bump1_deriv(xi) / box_.radii[size_t(k)];
    }
    std::array<double, 4> g{};
    for (int k = 0; k < 4; ++k) {
        double p = db[size_t(k)];
        for (int j = 0; j < 4; ++j)
            if (j != k) p *= b[size_t(j)];
        g[size_t(k)] = p;
    }
    return g;
}

WindowCertificate certify_window(const TestFunction& F, double t_max) {
    if (!(t_max >= 0.0) || !std::isfinite(t_max))
        throw DomainError("certify_window: t_max must be finite and nonnegative");
    const BumpBox& box = F.box();
    const Interval x11 = box.entry_interval(0);
    const Interval x21 = box.entry_interval(2);
    const Interval t{-t_max, t_max};

    WindowCertificate cert;
    cert.t_max = t_max;
    cert.det = box.det_interval();
    cert.v = x21;
    cert.u = x11 + t * x21;
    if (!cert.u.sign_definite()) {
        std::ostringstream os;
        os << "certify_window: u = x11 + t*x21 cannot be certified away from 0 over |t| <= "
           << t_max << " (u in [" << cert.u.lo << ", " << cert.u.hi << "])";
        throw CertificationError(os.str());
    }
    cert.w = cert.det / cert.u;
    if (!cert.w.sign_definite())
        throw CertificationError("certify_window: w = det/u cannot be certified away from 0");
    return cert;
}

}  // namespace gl2
