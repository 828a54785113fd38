#pragma once

#include <complex>

#include "gl2/errors.hpp"

namespace gl2 {

using Cplx = std::complex<double>;

// Parity tag in Z/2Z.
using Parity = int;
inline Parity parity_add(Parity a, Parity b) { return (a + b) & 1; }

// Exponent of the signed power x^(mu // eps) = |x|^mu * sgn(x)^eps on R^x.
struct SignedExponent {
    Cplx mu{0.0, 0.0};
    Parity eps = 0;

    SignedExponent() = default;
    SignedExponent(Cplx m, Parity e) : mu(m), eps(e & 1) {}

    SignedExponent operator+(const SignedExponent& o) const {
        return {mu + o.mu, parity_add(eps, o.eps)};
    }
};

// Exponent pair of the bi-power z^(nu || nu') = |z|^(2 nu) * conj(z)^(nu'-nu)
// on C^x; single-valued because nu' - nu is an integer.
struct BiExponent {
    Cplx nu{0.0, 0.0};
    Cplx nu_p{0.0, 0.0};

    BiExponent() = default;
    BiExponent(Cplx n, Cplx np);  // validates integrality of nu - nu_p

    long integer_difference() const;  // nu_p - nu as an exact integer
};

// Discrete-series parameter (n, s, delta), n >= 1.
struct DiscreteParam {
    int n = 1;
    double s = 0.0;
    Parity delta = 0;

    DiscreteParam() = default;
    DiscreteParam(int n_, double s_, Parity d_);
};

// |x|^mu * sgn(x)^eps for x != 0.  Holomorphic in mu for fixed x.
Cplx power_r(double x, const SignedExponent& e);
inline Cplx power_r(double x, Cplx mu, Parity eps) { return power_r(x, SignedExponent(mu, eps)); }

// |z|^(2 nu) * conj(z)^(nu'-nu) for z != 0; the integer power is computed by
// repeated multiplication so no branch of the logarithm is ever chosen.
Cplx power_c(Cplx z, const BiExponent& e);
inline Cplx power_c(Cplx z, Cplx nu, Cplx nu_p) { return power_c(z, BiExponent(nu, nu_p)); }

// Plancherel density on the principal piece: the scalar factor
//   1/(16 pi^3) (s1-s2) tanh(pi (s1-s2)/2)   for eps1 = 0,
//   1/(16 pi^3) (s1-s2) coth(pi (s1-s2)/2)   for eps1 = 1,
// extended continuously across s1 = s2 (value 1/(8 pi^4) for the coth class).
// The measure bookkeeping ds1 ds2 is the caller's business.
double plancherel_density_principal(double s1, double s2, Parity eps1, Parity eps2);

// Density n/(8 pi^3) on the n-th discrete piece.
double plancherel_density_discrete(const DiscreteParam& p);

}  // namespace gl2
