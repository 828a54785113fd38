#include "gl2/scalars.hpp"

#include <cmath>

namespace gl2 {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// A 1e-9 window absorbs the one-ulp noise of parameter arithmetic; the
// rounded integer itself is then used exactly, so the power stays
// single-valued.
bool is_exact_integer(Cplx z, long& out) {
    if (std::abs(z.imag()) > 1e-9) return false;
    double r = std::round(z.real());
    if (std::abs(r - z.real()) > 1e-9) return false;
    out = static_cast<long>(r);
    return true;
}
}  // namespace

BiExponent::BiExponent(Cplx n, Cplx np) : nu(n), nu_p(np) {
    long k;
    if (!is_exact_integer(nu - nu_p, k))
        throw DomainError("BiExponent: nu - nu' must be an exact integer");
}

long BiExponent::integer_difference() const {
    long k = 0;
    is_exact_integer(nu_p - nu, k);
    return k;
}

DiscreteParam::DiscreteParam(int n_, double s_, Parity d_) : n(n_), s(s_), delta(d_ & 1) {
    if (n < 1) throw DomainError("DiscreteParam: n must be >= 1");
}

Cplx power_r(double x, const SignedExponent& e) {
    if (x == 0.0) throw DomainError("power_r: x = 0");
    Cplx v = std::exp(e.mu * std::log(std::abs(x)));
    if (e.eps && x < 0.0) v = -v;
    return v;
}

Cplx power_c(Cplx z, const BiExponent& e) {
    if (z == Cplx(0.0, 0.0)) throw DomainError("power_c: z = 0");
    // |z|^(2 nu) = exp(nu * log(|z|^2)); the modulus is positive so the real
    // logarithm applies.
    Cplx v = std::exp(e.nu * std::log(std::norm(z)));
    long k = e.integer_difference();
    if (k != 0) {
        Cplx zb = std::conj(z);
        if (k < 0) {
            zb = 1.0 / zb;
            k = -k;
        }
        Cplx p = 1.0;
        for (long i = 0; i < k; ++i) p *= zb;
        v *= p;
    }
    return v;
}

double plancherel_density_principal(double s1, double s2, Parity eps1, Parity /*eps2*/) {
    const double x = s1 - s2;
    const double c = 1.0 / (16.0 * kPi * kPi * kPi);
    if ((eps1 & 1) == 0) return c * x * std::tanh(kPi * x / 2.0);
    // coth class: removable singularity at x = 0, Taylor fallback nearby.
    // x coth(pi x / 2) = (2/pi) (1 + y^2/3 - y^4/45 + ...) with y = pi x / 2.
    if (std::abs(x) < 1e-4) {
        const double y = kPi * x / 2.0;
        const double y2 = y * y;
        return c * (2.0 / kPi) * (1.0 + y2 / 3.0 - y2 * y2 / 45.0);
    }
    return c * x / std::tanh(kPi * x / 2.0);
}

double plancherel_density_discrete(const DiscreteParam& p) {
    return p.n / (8.0 * kPi * kPi * kPi);
}

}  // namespace gl2
