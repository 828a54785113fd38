#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "gl2/quadrature.hpp"
#include "gl2/scalars.hpp"
#include "gl2/testfn.hpp"

namespace gl2 {

// Spectral point (mu1, eps1; mu2, eps2) of the principal series, carrying the
// degenerate-series parameter sigma of the overalgebra as context.
struct PrincipalParam {
    Cplx mu1{0.0, 0.0}, mu2{0.0, 0.0};
    Parity eps1 = 0, eps2 = 0;
    Cplx sigma{0.0, 0.0};  // purely imaginary

    PrincipalParam() = default;
    PrincipalParam(Cplx m1, Parity e1, Cplx m2, Parity e2, Cplx sg = {0.0, 0.0});

    // Shift mu_1 by j and mu_2 by k, flipping the parity tag once per unit.
    PrincipalParam shifted(int j, int k) const;
};

// Tempered spectral parameter: unitary principal (s1 >= s2) or discrete.
struct TemperedParam {
    enum class Kind { Principal, Discrete };
    Kind kind = Kind::Principal;
    double s1 = 0.0, s2 = 0.0;
    Parity eps1 = 0, eps2 = 0;
    DiscreteParam disc;

    static TemperedParam principal(double s1, double s2, Parity e1, Parity e2);
    static TemperedParam discrete(DiscreteParam p);
    double plancherel_density() const;
};

// Scalar function of one real variable with (optionally) an analytic first
// derivative; the harness only evaluates it inside [support_lo, support_hi].
struct Section {
    std::function<Cplx(double)> value;
    std::function<Cplx(double)> deriv;
    double support_lo = -2.0;
    double support_hi = 2.0;

    Cplx operator()(double t) const { return value(t); }
};

// b((t - center)/halfwidth) with its exact derivative.
Section bump_section(double center, double halfwidth);

// The principal-series operator T_{mu,eps}(X) phi at the point t.
Cplx apply_T(const PrincipalParam& p, const MatrixPoint& X, const Section& phi, double t);

// Lie algebra action; (i, j) indexes the gl_2 generator e_ij, i, j in {1, 2}.
Cplx apply_L(const PrincipalParam& p, int i, int j, const Section& phi, double t);

// T(F) phi (t) as the 4-d integral of F(X) [T(X) phi](t) det(X)^-2 over the
// support box of F.  Certifies the window for |t| before integrating.
IntegralResult fourier_direct(const TestFunction& F, const PrincipalParam& p, const Section& phi,
                              double t, const PanelRule& rule);

// Kernel derivative selector.
enum class KernelDeriv { None = 0, Dt = 1, Ds = 2 };

// Kernel family K(t, s | mu + shifts) of T(F) for one (F, p) pair, evaluated
// by the bounded-domain chart integral over the (t,s)-uniform hull box.
// Evaluations are cached; the cache is mutex-protected for concurrent use.
class KernelFamily {
  public:
    KernelFamily(const TestFunction& F, const PrincipalParam& p, double t_max,
                 const PanelRule& rule);

    const PrincipalParam& param() const { return param_; }
    const WindowCertificate& window() const { return cert_; }
    const TestFunction& test_function() const { return F_; }
    const PanelRule& rule() const { return rule_; }

    // K and its t/s partials at shifted parameters (mu1 + j, mu2 + k).
    // `fine` selects the refined-order pass used for error estimation.
    Cplx eval(double t, double s, int j, int k, KernelDeriv d, bool fine = false) const;

    // Same chart integral with the F-factor replaced by a caller-supplied
    // integrand g(u, v, w, X); parameters are not shifted.  Not cached.
    Cplx eval_custom(double t, double s,
                     const std::function<Cplx(double, double, double, const MatrixPoint&)>& g,
                     bool fine = false) const;

    void set_cache_enabled(bool on) { cache_enabled_ = on; }

  private:
    Cplx integrate(double t, double s, int j, int k, KernelDeriv d, int order) const;
    std::array<Interval, 3> chart_box(double t, double s) const;

    TestFunction F_;
    PrincipalParam param_;
    WindowCertificate cert_;
    PanelRule rule_;
    bool cache_enabled_ = true;
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<std::string, Cplx> cache_;
};

// One-shot forms of the kernel operations.
Cplx kernel_K(const TestFunction& F, const PrincipalParam& p, double t, double s,
              double t_max, const PanelRule& rule);
Cplx kernel_K_dt(const TestFunction& F, const PrincipalParam& p, double t, double s,
                 double t_max, const PanelRule& rule);
Cplx kernel_K_ds(const TestFunction& F, const PrincipalParam& p, double t, double s,
                 double t_max, const PanelRule& rule);
// which = 1 or 2 (spectral slot), dir = +1 or -1.
Cplx kernel_shifted(const TestFunction& F, const PrincipalParam& p, double t, double s,
                    int which, int dir, double t_max, const PanelRule& rule);

// Certified enclosure of { s : K(t, s) can be nonzero } for one t: the image
// of the support box under the fractional-linear map in s.
Interval kernel_s_support(const TestFunction& F, double t);

// Intertwining integral A f(t) with kernel (t-s)^(-1-mu1+mu2 // eps1-eps2);
// requires Re(mu1 - mu2) < 0 (the convergent strip).
Cplx intertwiner_A(const PrincipalParam& p, const Section& f, double t, int order = 16);

}  // namespace gl2
