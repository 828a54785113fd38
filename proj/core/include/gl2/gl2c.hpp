#pragma once

#include <array>
#include <functional>

#include "gl2/interval.hpp"
#include "gl2/quadrature.hpp"
#include "gl2/scalars.hpp"

namespace gl2 {

// Spectral parameter of the GL2(C) principal series together with the
// (sigma, sigma') context of the overalgebra.  mu1 - mu1' and mu2 - mu2'
// must be exact integers; on the tempered set Re(mu_i + mu_i') = 0.
struct ComplexParam {
    Cplx mu1, mu1p, mu2, mu2p;
    Cplx sigma{0.0, 0.0}, sigmap{0.0, 0.0};

    ComplexParam(Cplx m1, Cplx m1p, Cplx m2, Cplx m2p, Cplx sg = {0.0, 0.0},
                 Cplx sgp = {0.0, 0.0});

    bool is_tempered(double tol = 1e-12) const;

    // Shift of one of the four exponents by +1/-1 (no parity bookkeeping).
    ComplexParam shifted(int which, bool primed, int dir) const;
};

struct CMatrix {
    Cplx x11, x12, x21, x22;

    Cplx det() const { return x11 * x22 - x12 * x21; }
    static CMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);

// Wirtinger data of a real-valued smooth function on Mat2(C).
struct WirtingerData {
    double f = 0.0;
    std::array<Cplx, 4> d{};     // d/dz_pq
    std::array<Cplx, 4> dbar{};  // d/dzbar_pq
};

// Product of eight 1-d bumps in Re/Im of the four entries; support certified
// away from {det = 0} by rectangle arithmetic.
class ComplexTestFunction {
  public:
    ComplexTestFunction(CMatrix center, std::array<double, 8> radii);

    double eval(const CMatrix& X) const;
    WirtingerData wirtinger(const CMatrix& X) const;

    CRect entry_rect(int k) const;  // k in 0..3
    CRect det_rect() const;
    const CMatrix& center() const { return center_; }
    const std::array<double, 8>& radii() const { return radii_; }

  private:
    CMatrix center_;
    std::array<double, 8> radii_;  // Re11, Im11, Re12, Im12, Re21, Im21, Re22, Im22
};

// Section on C with analytic Wirtinger derivatives.
struct CSection {
    std::function<Cplx(Cplx)> value;
    std::function<Cplx(Cplx)> d;     // d/dt
    std::function<Cplx(Cplx)> dbar;  // d/dtbar

    Cplx operator()(Cplx t) const { return value(t); }
};

// Product bump b(Re(t-c)/h) b(Im(t-c)/h) with exact Wirtinger derivatives.
CSection bump_csection(Cplx center, double halfwidth);

// Principal series of GL2(C).
Cplx apply_T_c(const ComplexParam& p, const CMatrix& X, const CSection& phi, Cplx t);

// Lie action of gl2(C) + gl2(C)bar; bar selects the antiholomorphic copy.
Cplx apply_L_c(const ComplexParam& p, int i, int j, bool bar, const CSection& phi, Cplx t);

// Kernel derivative selector for the complex kernel.
enum class CKernelDeriv { None = 0, Dt = 1, Ds = 2, DtBar = 3, DsBar = 4 };

struct ComplexWindow {
    CRect u, v, w;
};

// Rectangle enclosure of the chart image for one value of t; throws when
// |u| cannot be bounded away from zero.
ComplexWindow certify_window_c(const ComplexTestFunction& F, Cplx t);

// Six-real-dimensional QMC evaluation of the GL2(C) kernel (or a Wirtinger
// derivative of it) at the shifted parameters.
QmcResult kernel_K_c(const ComplexTestFunction& F, const ComplexParam& p, Cplx t, Cplx s,
                     const QmcRule& rule, CKernelDeriv d = CKernelDeriv::None,
                     std::array<int, 4> shift = {0, 0, 0, 0});

// Matrix-side generators entering the spot checks, evaluated pointwise:
// which in {14, 32}; bar selects the conjugated copy.
Cplx apply_e_c(int which, bool bar, const ComplexTestFunction& F, const CMatrix& X, Cplx sigma,
               Cplx sigmap);

// Two-sided evaluation of one identity of the complex operational calculus.
// which in {14, 32}; sign is the sign between the two kernel-side summands
// (+1 or -1; the printed complex table and the real table disagree for E14).
struct SpotCheck {
    Cplx lhs;
    double lhs_err = 0.0;
    Cplx rhs;
    double rhs_err = 0.0;

    double residual() const { return std::abs(lhs - rhs); }
    double combined_err() const { return std::hypot(lhs_err, rhs_err); }
};
SpotCheck e_spotcheck_c(int which, bool bar, int sign, const ComplexTestFunction& F,
                        const ComplexParam& p, Cplx t, Cplx s, const QmcRule& rule);

}  // namespace gl2
