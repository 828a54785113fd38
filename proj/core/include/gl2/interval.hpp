#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "gl2/errors.hpp"

namespace gl2 {

// Closed-interval arithmetic with a few-ulp outward widening after every
// operation; enough rigor for the support-window certificates used here.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double a, double b) : lo(std::min(a, b)), hi(std::max(a, b)) {}
    static Interval point(double a) { return {a, a}; }

    double width() const { return hi - lo; }
    double mag() const { return std::max(std::abs(lo), std::abs(hi)); }
    double mig() const {  // minimum absolute value over the interval
        if (lo > 0.0) return lo;
        if (hi < 0.0) return -hi;
        return 0.0;
    }
    bool contains_zero() const { return lo <= 0.0 && hi >= 0.0; }
    bool sign_definite() const { return !contains_zero(); }

    Interval widened() const {
        return {std::nextafter(std::nextafter(lo, -INFINITY), -INFINITY),
                std::nextafter(std::nextafter(hi, INFINITY), INFINITY)};
    }
};

inline Interval operator+(Interval a, Interval b) { return Interval(a.lo + b.lo, a.hi + b.hi).widened(); }
inline Interval operator-(Interval a, Interval b) { return Interval(a.lo - b.hi, a.hi - b.lo).widened(); }
inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }
inline Interval operator*(Interval a, Interval b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                    std::max(std::max(p1, p2), std::max(p3, p4)))
        .widened();
}
inline Interval operator/(Interval a, Interval b) {
    if (b.contains_zero()) throw CertificationError("interval division by interval containing 0");
    return (a * Interval(1.0 / b.hi, 1.0 / b.lo)).widened();
}
inline Interval hull(Interval a, Interval b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}
inline Interval intersect(Interval a, Interval b) {
    if (a.hi < b.lo || b.hi < a.lo) throw CertificationError("empty interval intersection");
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

// Axis-aligned rectangle in C, used by the GL2(C) window certificates.
struct CRect {
    Interval re, im;

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    double abs_lower() const {  // distance from 0 to the rectangle
        const double dr = re.mig(), di = im.mig();
        return std::hypot(dr, di);
    }
    double abs_upper() const { return std::hypot(re.mag(), im.mag()); }
};

inline CRect operator+(CRect a, CRect b) { return {a.re + b.re, a.im + b.im}; }
inline CRect operator-(CRect a, CRect b) { return {a.re - b.re, a.im - b.im}; }
inline CRect operator*(CRect a, CRect b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CRect cmul(std::complex<double> c, CRect a) {
    CRect cc{Interval::point(c.real()), Interval::point(c.imag())};
    return cc * a;
}
inline CRect recip(CRect a) {
    if (a.contains_zero()) throw CertificationError("rectangle reciprocal: 0 in rectangle");
    // Re(1/z) and Im(1/z) are harmonic, so their extrema over the solid
    // rectangle sit on its boundary; interval-evaluate the four edges in
    // small segments for a tight certified enclosure.
    bool first = true;
    Interval re_out, im_out;
    const int kSegs = 16;
    auto edge = [&](Interval x, Interval y) {
        Interval n = x * x + y * y;
        Interval re = x / n;
        Interval im = (-y) / n;
        if (first) {
            re_out = re;
            im_out = im;
            first = false;
        } else {
            re_out = hull(re_out, re);
            im_out = hull(im_out, im);
        }
    };
    auto split_edge = [&](bool horizontal, double fixed, Interval range) {
        const double step = range.width() / kSegs;
        for (int k = 0; k < kSegs; ++k) {
            Interval seg{range.lo + k * step, range.lo + (k + 1) * step};
            if (horizontal) {
                edge(seg, Interval::point(fixed));
            } else {
                edge(Interval::point(fixed), seg);
            }
        }
    };
    split_edge(true, a.im.lo, a.re);
    split_edge(true, a.im.hi, a.re);
    split_edge(false, a.re.lo, a.im);
    split_edge(false, a.re.hi, a.im);
    return {re_out, im_out};
}

}  // namespace gl2
