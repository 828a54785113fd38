#pragma once

#include <array>
#include <string>

#include "gl2/interval.hpp"

namespace gl2 {

// Point of Mat2(R); a group element when det != 0.
struct MatrixPoint {
    double x11 = 0.0, x12 = 0.0, x21 = 0.0, x22 = 0.0;

    double det() const { return x11 * x22 - x12 * x21; }
    static MatrixPoint identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static MatrixPoint diag(double a, double d) { return {a, 0.0, 0.0, d}; }
};

MatrixPoint operator*(const MatrixPoint& a, const MatrixPoint& b);

// det(X)^(-2), the Haar weight relative to Lebesgue measure on the entries.
double haar_weight(const MatrixPoint& X);

// Closed box { |x_pq - c_pq| <= r_pq } certified (by interval arithmetic on
// the determinant) to avoid {det = 0}.
struct BumpBox {
    MatrixPoint center;
    std::array<double, 4> radii{};  // order: x11, x12, x21, x22

    BumpBox(MatrixPoint c, std::array<double, 4> r);

    Interval entry_interval(int k) const;  // k in 0..3, same order as radii
    Interval det_interval() const;
};

// The 1-d profile b(x) = exp(-1/(1-x^2)) on |x| < 1, zero outside, and its
// derivative b'(x) = b(x) * (-2x / (1-x^2)^2).
double bump1(double x);
double bump1_deriv(double x);

// Smooth compactly supported product-bump test function on GL2(R):
//   F(X) = prod_pq b((x_pq - c_pq)/r_pq),
// which vanishes with all derivatives on the box boundary.
class TestFunction {
  public:
    explicit TestFunction(BumpBox box) : box_(std::move(box)) {}

    const BumpBox& box() const { return box_; }

    double eval(const MatrixPoint& X) const;

    // Entrywise partials (d/dx11, d/dx12, d/dx21, d/dx22) F, closed form.
    std::array<double, 4> partials(const MatrixPoint& X) const;

  private:
    BumpBox box_;
};

// Interval certificate for the kernel chart over supp(F) x { |t| <= t_max }:
// u = x11 + t x21 and w = det/u keep a fixed sign and stay away from zero.
struct WindowCertificate {
    Interval u;    // sign-definite
    Interval v;    // = x21 range
    Interval w;    // sign-definite
    Interval det;  // sign-definite
    double t_max = 0.0;

    int sign_u() const { return u.lo > 0.0 ? +1 : -1; }
    int sign_w() const { return w.lo > 0.0 ? +1 : -1; }
};

// Fails loudly (CertificationError) when u can vanish on the window.
WindowCertificate certify_window(const TestFunction& F, double t_max);

}  // namespace gl2
