#include "gl2/shiftop.hpp"

#include <sstream>

namespace gl2 {

namespace {

Poly mu_diff_factor(long m) {
    // mu1 - mu2 - m
    return Poly::variable(kvar::mu1) - Poly::variable(kvar::mu2) - Poly(Rational(m));
}

Poly den_poly(const std::map<long, int>& den) {
    Poly p{Rational(1)};
    for (const auto& [m, mult] : den)
        for (int i = 0; i < mult; ++i) p = p * mu_diff_factor(m);
    return p;
}

}  // namespace

ShiftCoef::ShiftCoef(Poly num, std::map<long, int> den) : num_(std::move(num)), den_(std::move(den)) {
    for (auto& [m, mult] : den_)
        if (mult < 0) throw std::invalid_argument("ShiftCoef: negative denominator multiplicity");
    canonicalize();
}

void ShiftCoef::canonicalize() {
    for (auto it = den_.begin(); it != den_.end();) {
        if (it->second == 0) {
            it = den_.erase(it);
        } else {
            ++it;
        }
    }
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        const Poly f = mu_diff_factor(it->first);
        while (it->second > 0) {
            auto [quot, rem] = num_.divide(f);
            if (!rem.is_zero()) break;
            num_ = std::move(quot);
            --it->second;
        }
        if (it->second == 0) {
            it = den_.erase(it);
        } else {
            ++it;
        }
    }
}

ShiftCoef ShiftCoef::operator+(const ShiftCoef& o) const {
    // common denominator: max multiplicity per factor
    std::map<long, int> den = den_;
    for (const auto& [m, mult] : o.den_) {
        auto it = den.find(m);
        if (it == den.end()) {
            den[m] = mult;
        } else {
            it->second = std::max(it->second, mult);
        }
    }
    Poly a = num_, b = o.num_;
    for (const auto& [m, mult] : den) {
        const auto ita = den_.find(m);
        const auto itb = o.den_.find(m);
        const int ka = ita == den_.end() ? 0 : ita->second;
        const int kb = itb == o.den_.end() ? 0 : itb->second;
        const Poly f = mu_diff_factor(m);
        for (int i = ka; i < mult; ++i) a = a * f;
        for (int i = kb; i < mult; ++i) b = b * f;
    }
    return ShiftCoef(a + b, std::move(den));
}

ShiftCoef ShiftCoef::operator-(const ShiftCoef& o) const { return *this + (-o); }

ShiftCoef ShiftCoef::operator*(const ShiftCoef& o) const {
    std::map<long, int> den = den_;
    for (const auto& [m, mult] : o.den_) den[m] += mult;
    return ShiftCoef(num_ * o.num_, std::move(den));
}

ShiftCoef ShiftCoef::operator-() const {
    ShiftCoef r = *this;
    r.num_ = -r.num_;
    return r;
}

ShiftCoef ShiftCoef::mu_shifted(int j, int k) const {
    Poly n = num_.shift_var(kvar::mu1, j).shift_var(kvar::mu2, k);
    std::map<long, int> den;
    // (mu1+j) - (mu2+k) - m = mu1 - mu2 - (m - j + k)
    for (const auto& [m, mult] : den_) den[m - j + k] = mult;
    return ShiftCoef(std::move(n), std::move(den));
}

Cplx ShiftCoef::eval(Cplx mu1, Cplx mu2, Cplx sigma, double t, double s) const {
    const std::array<Cplx, kPolyVars> vals = {mu1, mu2, sigma, Cplx(t), Cplx(s)};
    Cplx v = num_.eval(vals);
    for (const auto& [m, mult] : den_) {
        const Cplx f = mu1 - mu2 - double(m);
        if (std::abs(f) < 1e-9)
            throw PoleError("ShiftCoef: denominator (mu1-mu2-" + std::to_string(m) +
                            ") vanishes at this parameter point");
        for (int i = 0; i < mult; ++i) v /= f;
    }
    return v;
}

std::string ShiftCoef::str() const {
    std::string s = num_.str(kKernelVarNames);
    if (!den_.empty()) {
        s = "(" + s + ") / (" + den_poly(den_).str(kKernelVarNames) + ")";
    }
    return s;
}

void DiffDiffOp::add_term(const TermKey& key, const ShiftCoef& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

int DiffDiffOp::max_deriv_order() const {
    int m = 0;
    for (const auto& [key, c] : terms_) m = std::max(m, key.dt + key.ds);
    return m;
}

DiffDiffOp DiffDiffOp::operator+(const DiffDiffOp& o) const {
    DiffDiffOp r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key, c);
    return r;
}
DiffDiffOp DiffDiffOp::operator-(const DiffDiffOp& o) const { return *this + (-o); }
DiffDiffOp DiffDiffOp::operator-() const {
    DiffDiffOp r;
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
}

std::string term_key_str(const TermKey& key) {
    std::ostringstream os;
    for (int i = 0; i < key.dt; ++i) os << "d/dt ";
    for (int i = 0; i < key.ds; ++i) os << "d/ds ";
    if (key.j > 0) os << "V1^+" << (key.j > 1 ? std::to_string(key.j) : "") << " ";
    if (key.j < 0) os << "V1^-" << (key.j < -1 ? std::to_string(-key.j) : "") << " ";
    if (key.k > 0) os << "V2^+" << (key.k > 1 ? std::to_string(key.k) : "") << " ";
    if (key.k < 0) os << "V2^-" << (key.k < -1 ? std::to_string(-key.k) : "") << " ";
    std::string s = os.str();
    if (s.empty()) return "1";
    s.pop_back();
    return s;
}

std::string DiffDiffOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "] " << term_key_str(key);
    }
    return os.str();
}

DiffDiffOp compose_shift(const DiffDiffOp& A, const DiffDiffOp& B) {
    DiffDiffOp r;
    for (const auto& [ka, ca] : A.terms()) {
        for (const auto& [kb, cb] : B.terms()) {
            // move the shift of A past B's coefficient
            const ShiftCoef cbs = cb.mu_shifted(ka.j, ka.k);
            // Leibniz: dt^a ds^b (c .) = sum binom(a,i) binom(b,l)
            //          (dt^(a-i) ds^(b-l) c) dt^i ds^l
            long binom_t = 1;
            std::vector<ShiftCoef> dt_pows;  // dt-derivatives of cbs
            dt_pows.push_back(cbs);
            for (int i = 0; i < ka.dt; ++i) dt_pows.push_back(dt_pows.back().dt());
            for (int i = 0; i <= ka.dt; ++i) {
                long binom_s = 1;
                std::vector<ShiftCoef> ds_pows;
                ds_pows.push_back(dt_pows[size_t(ka.dt - i)]);
                for (int l = 0; l < ka.ds; ++l) ds_pows.push_back(ds_pows.back().ds());
                for (int l = 0; l <= ka.ds; ++l) {
                    const ShiftCoef part = ds_pows[size_t(ka.ds - l)];
                    if (!part.is_zero()) {
                        TermKey key{i + kb.dt, l + kb.ds, ka.j + kb.j, ka.k + kb.k};
                        ShiftCoef coef = ca * part;
                        const long mult = binom_t * binom_s;
                        if (mult != 1) coef = coef * ShiftCoef::constant(mult);
                        r.add_term(key, coef);
                    }
                    binom_s = binom_s * (ka.ds - l) / (l + 1);
                }
                binom_t = binom_t * (ka.dt - i) / (i + 1);
            }
        }
    }
    return r;
}

DiffDiffOp bracket_shift(const DiffDiffOp& A, const DiffDiffOp& B) {
    return compose_shift(A, B) - compose_shift(B, A);
}

namespace {

ShiftCoef sc_mu1() { return ShiftCoef::from_poly(Poly::variable(kvar::mu1)); }
ShiftCoef sc_mu2() { return ShiftCoef::from_poly(Poly::variable(kvar::mu2)); }
ShiftCoef sc_sigma() { return ShiftCoef::from_poly(Poly::variable(kvar::sigma)); }
ShiftCoef sc_t() { return ShiftCoef::from_poly(Poly::variable(kvar::t)); }
ShiftCoef sc_s() { return ShiftCoef::from_poly(Poly::variable(kvar::s)); }
ShiftCoef sc_c(long n, long d = 1) { return ShiftCoef::constant(n, d); }

// 1/(mu1 - mu2)
ShiftCoef inv_mu_diff() { return ShiftCoef(Poly(Rational(1)), {{0, 1}}); }

}  // namespace

DiffDiffOp E_seed(int k, int l) {
    DiffDiffOp op;
    const TermKey id{0, 0, 0, 0}, Dt{1, 0, 0, 0}, Ds{0, 1, 0, 0};
    if (k == 1 && l == 1) {
        op.add_term(Dt, -sc_t());
        op.add_term(id, sc_mu1() - sc_c(1, 2));
    } else if (k == 1 && l == 2) {
        op.add_term(Dt, sc_c(1));
    } else if (k == 2 && l == 1) {
        op.add_term(Dt, -(sc_t() * sc_t()));
        op.add_term(id, (sc_mu1() - sc_mu2() - sc_c(1)) * sc_t());
    } else if (k == 2 && l == 2) {
        op.add_term(Dt, sc_t());
        op.add_term(id, sc_mu2() + sc_c(1, 2));
    } else if (k == 3 && l == 3) {
        op.add_term(Ds, -sc_s());
        op.add_term(id, -(sc_mu1() + sc_c(1, 2)));
    } else if (k == 3 && l == 4) {
        op.add_term(Ds, sc_c(1));
    } else if (k == 4 && l == 3) {
        op.add_term(Ds, -(sc_s() * sc_s()));
        op.add_term(id, (sc_mu2() - sc_mu1() - sc_c(1)) * sc_s());
    } else if (k == 4 && l == 4) {
        op.add_term(Ds, sc_s());
        op.add_term(id, sc_c(1, 2) - sc_mu2());
    } else if (k == 1 && l == 4) {
        // E14 = (mu1 - 1/2 - sigma)/(mu1-mu2) d/ds V1^- +
        //       (mu2 - 1/2 - sigma)/(mu1-mu2) d/dt V2^-
        op.add_term(TermKey{0, 1, -1, 0}, (sc_mu1() - sc_c(1, 2) - sc_sigma()) * inv_mu_diff());
        op.add_term(TermKey{1, 0, 0, -1}, (sc_mu2() - sc_c(1, 2) - sc_sigma()) * inv_mu_diff());
    } else if (k == 3 && l == 2) {
        // E32 = (1/2 + mu1 + sigma)/(mu1-mu2) d/dt V1^+ +
        //       (1/2 + mu2 + sigma)/(mu1-mu2) d/ds V2^+
        op.add_term(TermKey{1, 0, 1, 0}, (sc_c(1, 2) + sc_mu1() + sc_sigma()) * inv_mu_diff());
        op.add_term(TermKey{0, 1, 0, 1}, (sc_c(1, 2) + sc_mu2() + sc_sigma()) * inv_mu_diff());
    } else {
        throw std::invalid_argument("E_seed: not a seed generator");
    }
    return op;
}

DiffDiffOp E_printed(int k, int l) {
    if ((k <= 2 && l <= 2) || (k >= 3 && l >= 3)) return E_seed(k, l);
    DiffDiffOp op;
    const ShiftCoef q1 = (sc_c(1, 2) - sc_mu1() + sc_sigma()) * inv_mu_diff();
    const ShiftCoef q2 = (sc_c(1, 2) - sc_mu2() + sc_sigma()) * inv_mu_diff();
    const ShiftCoef p1 = (sc_c(1, 2) + sc_mu1() + sc_sigma()) * inv_mu_diff();
    const ShiftCoef p2 = (sc_c(1, 2) + sc_mu2() + sc_sigma()) * inv_mu_diff();
    const ShiftCoef dmu = sc_mu1() - sc_mu2();
    if (k == 1 && l == 3) {
        // (1/2 - mu2 + sigma)/(mu1-mu2) s d/dt V2^- +
        // (1/2 - mu1 + sigma)/(mu1-mu2) (mu1 - mu2 + s d/ds) V1^-
        op.add_term(TermKey{1, 0, 0, -1}, q2 * sc_s());
        op.add_term(TermKey{0, 0, -1, 0}, q1 * dmu);
        op.add_term(TermKey{0, 1, -1, 0}, q1 * sc_s());
    } else if (k == 1 && l == 4) {
        return E_seed(1, 4);
    } else if (k == 2 && l == 3) {
        // (1/2 - mu2 + sigma)/(mu1-mu2) s (-(mu1-mu2) + t d/dt) V2^- +
        // (1/2 - mu1 + sigma)/(mu1-mu2) t (mu1 - mu2 + s d/ds) V1^-
        op.add_term(TermKey{0, 0, 0, -1}, -(q2 * sc_s() * dmu));
        op.add_term(TermKey{1, 0, 0, -1}, q2 * sc_s() * sc_t());
        op.add_term(TermKey{0, 0, -1, 0}, q1 * sc_t() * dmu);
        op.add_term(TermKey{0, 1, -1, 0}, q1 * sc_t() * sc_s());
    } else if (k == 2 && l == 4) {
        // -(1/2 + sigma - mu1)/(mu1-mu2) t d/ds V1^- +
        // (1/2 + mu2 - sigma)/(mu1-mu2) (mu1 - mu2 + t d/ds) V2^-
        const ShiftCoef c2 = (sc_c(1, 2) + sc_mu2() - sc_sigma()) * inv_mu_diff();
        op.add_term(TermKey{0, 1, -1, 0}, -(q1 * sc_t()));
        op.add_term(TermKey{0, 0, 0, -1}, c2 * dmu);
        op.add_term(TermKey{0, 1, 0, -1}, c2 * sc_t());
    } else if (k == 3 && l == 1) {
        // (1/2 + mu1 + sigma)/(mu1-mu2) (mu1 - mu2 - t d/dt) V1^+ -
        // (1/2 + mu2 + sigma)/(mu1-mu2) t d/ds V2^+
        op.add_term(TermKey{0, 0, 1, 0}, p1 * dmu);
        op.add_term(TermKey{1, 0, 1, 0}, -(p1 * sc_t()));
        op.add_term(TermKey{0, 1, 0, 1}, -(p2 * sc_t()));
    } else if (k == 3 && l == 2) {
        return E_seed(3, 2);
    } else if (k == 4 && l == 1) {
        // (1/2 + mu1 + sigma)/(mu1-mu2) s (mu1 - mu2 - t d/dt) V1^+ -
        // (1/2 + mu2 + sigma)/(mu1-mu2) t (mu1 - mu2 + s d/ds) V2^+
        op.add_term(TermKey{0, 0, 1, 0}, p1 * sc_s() * dmu);
        op.add_term(TermKey{1, 0, 1, 0}, -(p1 * sc_s() * sc_t()));
        op.add_term(TermKey{0, 0, 0, 1}, -(p2 * sc_t() * dmu));
        op.add_term(TermKey{0, 1, 0, 1}, -(p2 * sc_t() * sc_s()));
    } else if (k == 4 && l == 2) {
        // (1/2 + mu1 + sigma)/(mu1-mu2) s d/dt V1^+ +
        // (1/2 + mu2 + sigma)/(mu1-mu2) (mu1 - mu2 + s d/ds) V2^+
        op.add_term(TermKey{1, 0, 1, 0}, p1 * sc_s());
        op.add_term(TermKey{0, 0, 0, 1}, p2 * dmu);
        op.add_term(TermKey{0, 1, 0, 1}, p2 * sc_s());
    } else {
        throw std::invalid_argument("E_printed: bad index");
    }
    return op;
}

ETable generate_E_table() {
    ETable T;
    auto set = [&T](int k, int l, DiffDiffOp op) { T.op[size_t(k - 1)][size_t(l - 1)] = std::move(op); };
    for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) set(k, l, E_seed(k, l));
    for (int k = 3; k <= 4; ++k)
        for (int l = 3; l <= 4; ++l) set(k, l, E_seed(k, l));
    set(1, 4, E_seed(1, 4));
    set(3, 2, E_seed(3, 2));
    set(1, 3, bracket_shift(T.at(1, 4), T.at(4, 3)));
    set(2, 3, bracket_shift(T.at(2, 1), T.at(1, 3)));
    set(2, 4, bracket_shift(T.at(2, 1), T.at(1, 4)));
    set(3, 1, bracket_shift(T.at(3, 2), T.at(2, 1)));
    set(4, 1, bracket_shift(T.at(4, 3), T.at(3, 1)));
    set(4, 2, bracket_shift(T.at(4, 3), T.at(3, 2)));
    return T;
}

ETable printed_E_table() {
    ETable T;
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
            if (k <= 2 && l <= 2) {
                T.op[size_t(k - 1)][size_t(l - 1)] = E_seed(k, l);
            } else if (k >= 3 && l >= 3) {
                T.op[size_t(k - 1)][size_t(l - 1)] = E_seed(k, l);
            } else {
                T.op[size_t(k - 1)][size_t(l - 1)] = E_printed(k, l);
            }
        }
    return T;
}

std::vector<ETableDiffEntry> diff_E_tables(const ETable& regenerated, const ETable& printed) {
    std::vector<ETableDiffEntry> out;
    for (int k = 1; k <= 4; ++k) {
        for (int l = 1; l <= 4; ++l) {
            const auto& ra = regenerated.at(k, l).terms();
            const auto& pa = printed.at(k, l).terms();
            for (const auto& [key, c] : ra) {
                auto it = pa.find(key);
                if (it == pa.end()) {
                    out.push_back({k, l, key, c.str(), "absent"});
                } else if (it->second != c) {
                    out.push_back({k, l, key, c.str(), it->second.str()});
                }
            }
            for (const auto& [key, c] : pa) {
                if (ra.find(key) == ra.end()) out.push_back({k, l, key, "absent", c.str()});
            }
        }
    }
    return out;
}

Cplx apply_diffdiff(const DiffDiffOp& op, const KernelFamily& fam, double t, double s, bool fine) {
    const PrincipalParam& p = fam.param();
    Cplx total{0.0, 0.0};
    for (const auto& [key, c] : op.terms()) {
        if (key.dt + key.ds > 1)
            throw DomainError("apply_diffdiff: terms of derivative order >= 2 are not supported");
        const Cplx coef = c.eval(p.mu1, p.mu2, p.sigma, t, s);
        const KernelDeriv d = key.dt ? KernelDeriv::Dt : (key.ds ? KernelDeriv::Ds : KernelDeriv::None);
        total += coef * fam.eval(t, s, key.j, key.k, d, fine);
    }
    return total;
}

}  // namespace gl2
