#include "gl2/poly.hpp"

#include <sstream>

namespace gl2 {

double to_double(const Rational& r) { return r.convert_to<double>(); }

Poly Poly::derivative(int var) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        d.e[var] = int16_t(m.e[var] - 1);
        r.add_term(d, c * m.e[var]);
    }
    return r;
}

Poly Poly::shift_var(int var, long offset) const {
    if (offset == 0) return *this;
    Poly r;
    for (const auto& [m, c] : terms_) {
        // (x + offset)^n expanded by the binomial theorem.
        int n = m.e[var];
        Rational binom = 1;  // C(n, k) * offset^k accumulated incrementally
        Rational off(offset);
        Rational pow_off = 1;
        for (int k = 0; k <= n; ++k) {
            Monomial d = m;
            d.e[var] = int16_t(n - k);
            r.add_term(d, c * binom * pow_off);
            binom = binom * (n - k) / (k + 1);
            pow_off *= off;
        }
    }
    return r;
}

std::pair<Poly, Poly> Poly::divide(const Poly& d) const {
    Poly quotient, remainder;
    if (d.is_zero()) throw std::invalid_argument("Poly::divide by zero polynomial");
    const auto& dlead = *d.terms_.rbegin();  // largest monomial in lex order
    Poly work = *this;
    while (!work.terms_.empty()) {
        auto lead = *work.terms_.rbegin();
        if (dlead.first.divides(lead.first)) {
            Monomial q = lead.first / dlead.first;
            Rational qc = lead.second / dlead.second;
            quotient.add_term(q, qc);
            Poly t;
            t.terms_[q] = qc;
            work -= t * d;
        } else {
            remainder.add_term(lead.first, lead.second);
            work.terms_.erase(std::prev(work.terms_.end()));
        }
    }
    return {std::move(quotient), std::move(remainder)};
}

Cplx Poly::eval(const std::array<Cplx, kPolyVars>& x) const {
    Cplx total = 0.0;
    for (const auto& [m, c] : terms_) {
        Cplx v = to_double(c);
        for (int i = 0; i < kPolyVars; ++i) {
            for (int k = 0; k < m.e[i]; ++k) v *= x[i];
        }
        total += v;
    }
    return total;
}

std::string Poly::str(const std::array<const char*, kPolyVars>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest monomial first; map iterates ascending, so walk backwards.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1);
        bool has_var = false;
        for (int i = 0; i < kPolyVars; ++i) has_var = has_var || m.e[i] > 0;
        if (!unit || !has_var) os << a.str();
        bool need_star = !unit || !has_var;
        for (int i = 0; i < kPolyVars; ++i) {
            if (m.e[i] == 0) continue;
            if (need_star) os << "*";
            os << names[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace gl2
