#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gl2 {

using Rational = boost::multiprecision::cpp_rational;
using Cplx = std::complex<double>;

// Exact multivariate polynomials in a fixed set of five indeterminates with
// rational coefficients.  Two instantiations are used throughout:
//   matrix side:  (x11, x12, x21, x22, sigma)
//   kernel side:  (mu1, mu2, sigma, t, s)
// The variable names are supplied at printing/evaluation time, the class
// itself only sees exponent vectors.
inline constexpr int kPolyVars = 5;

struct Monomial {
    std::array<int16_t, kPolyVars> e{};

    bool operator<(const Monomial& o) const { return e < o.e; }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kPolyVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kPolyVars; ++i) r.e[i] = int16_t(e[i] + o.e[i]);
        return r;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kPolyVars; ++i) r.e[i] = int16_t(e[i] - o.e[i]);
        return r;
    }
};

class Poly {
  public:
    Poly() = default;
    explicit Poly(Rational c) {
        if (c != 0) terms_[Monomial{}] = std::move(c);
    }
    static Poly variable(int i, int power = 1) {
        Poly p;
        Monomial m;
        m.e[i] = int16_t(power);
        p.terms_[m] = 1;
        return p;
    }
    static Poly constant(long num, long den = 1) { return Poly(Rational(num, den)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly r;
        if (c == 0) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
        return r;
    }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(int var) const;

    // Substitutes variable `var` by (var + offset); used by the mu-shift rule.
    Poly shift_var(int var, long offset) const;

    // Division with remainder by a single divisor with respect to the
    // lexicographic order: returns {quotient, remainder}.  The remainder is
    // zero iff `d` divides *this.
    std::pair<Poly, Poly> divide(const Poly& d) const;

    Cplx eval(const std::array<Cplx, kPolyVars>& x) const;

    std::string str(const std::array<const char*, kPolyVars>& names) const;

  private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Monomial, Rational> terms_;
};

inline const std::array<const char*, kPolyVars> kMatrixVarNames = {"x11", "x12", "x21", "x22", "sigma"};
inline const std::array<const char*, kPolyVars> kKernelVarNames = {"mu1", "mu2", "sigma", "t", "s"};

// Variable indices for the two instantiations.
namespace mvar {
inline constexpr int x11 = 0, x12 = 1, x21 = 2, x22 = 3, sigma = 4;
}
namespace kvar {
inline constexpr int mu1 = 0, mu2 = 1, sigma = 2, t = 3, s = 4;
}

double to_double(const Rational& r);

}  // namespace gl2
