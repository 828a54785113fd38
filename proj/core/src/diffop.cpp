#include "gl2/diffop.hpp"

#include <sstream>

namespace gl2 {

namespace {

const Poly& det_poly() {
    static const Poly d = Poly::variable(mvar::x11) * Poly::variable(mvar::x22) -
                          Poly::variable(mvar::x12) * Poly::variable(mvar::x21);
    return d;
}

// d(det)/dx_pq: the cofactors x22, -x21, -x12, x11.
Poly det_partial(int entry) {
    switch (entry) {
        case 0: return Poly::variable(mvar::x22);
        case 1: return -Poly::variable(mvar::x21);
        case 2: return -Poly::variable(mvar::x12);
        default: return Poly::variable(mvar::x11);
    }
}

}  // namespace

RationalCoef4::RationalCoef4(Poly num, int det_pow) : num_(std::move(num)), det_pow_(det_pow) {
    if (det_pow_ < 0) throw std::invalid_argument("RationalCoef4: det power must be >= 0");
    canonicalize();
}

void RationalCoef4::canonicalize() {
    if (num_.is_zero()) {
        det_pow_ = 0;
        return;
    }
    while (det_pow_ > 0) {
        auto [quot, rem] = num_.divide(det_poly());
        if (!rem.is_zero()) break;
        num_ = std::move(quot);
        --det_pow_;
    }
}

RationalCoef4 RationalCoef4::operator+(const RationalCoef4& o) const {
    const int k = std::max(det_pow_, o.det_pow_);
    Poly a = num_, b = o.num_;
    for (int i = det_pow_; i < k; ++i) a = a * det_poly();
    for (int i = o.det_pow_; i < k; ++i) b = b * det_poly();
    return RationalCoef4(a + b, k);
}

RationalCoef4 RationalCoef4::operator-(const RationalCoef4& o) const { return *this + (-o); }

RationalCoef4 RationalCoef4::operator*(const RationalCoef4& o) const {
    return RationalCoef4(num_ * o.num_, det_pow_ + o.det_pow_);
}

RationalCoef4 RationalCoef4::operator-() const {
    RationalCoef4 r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalCoef4 RationalCoef4::partial(int entry) const {
    if (det_pow_ == 0) return RationalCoef4(num_.derivative(entry), 0);
    // d/dx (P / det^k) = (P' det - k P d(det)/dx) / det^(k+1)
    Poly n = num_.derivative(entry) * det_poly() -
             Rational(det_pow_) * (num_ * det_partial(entry));
    return RationalCoef4(std::move(n), det_pow_ + 1);
}

Cplx RationalCoef4::eval(const MatrixPoint& X, Cplx sigma) const {
    const std::array<Cplx, kPolyVars> vals = {Cplx(X.x11), Cplx(X.x12), Cplx(X.x21), Cplx(X.x22),
                                              sigma};
    Cplx v = num_.eval(vals);
    const double d = X.det();
    for (int i = 0; i < det_pow_; ++i) v /= d;
    return v;
}

std::string RationalCoef4::str() const {
    std::string s = num_.str(kMatrixVarNames);
    if (det_pow_ > 0) {
        s = "(" + s + ")/det";
        if (det_pow_ > 1) s += "^" + std::to_string(det_pow_);
    }
    return s;
}

DiffOp2 DiffOp2::operator+(const DiffOp2& o) const {
    DiffOp2 r;
    for (int i = 0; i < 4; ++i) r.d[size_t(i)] = d[size_t(i)] + o.d[size_t(i)];
    r.c0 = c0 + o.c0;
    return r;
}
DiffOp2 DiffOp2::operator-(const DiffOp2& o) const { return *this + (-o); }
DiffOp2 DiffOp2::operator-() const {
    DiffOp2 r;
    for (int i = 0; i < 4; ++i) r.d[size_t(i)] = -d[size_t(i)];
    r.c0 = -c0;
    return r;
}
bool DiffOp2::operator==(const DiffOp2& o) const {
    for (int i = 0; i < 4; ++i)
        if (d[size_t(i)] != o.d[size_t(i)]) return false;
    return c0 == o.c0;
}
bool DiffOp2::is_zero() const {
    for (int i = 0; i < 4; ++i)
        if (!d[size_t(i)].is_zero()) return false;
    return c0.is_zero();
}

std::string DiffOp2::str() const {
    static const char* names[4] = {"d11", "d12", "d21", "d22"};
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < 4; ++i) {
        if (d[size_t(i)].is_zero()) continue;
        if (any) os << " + ";
        os << "(" << d[size_t(i)].str() << ")*" << names[i];
        any = true;
    }
    if (!c0.is_zero()) {
        if (any) os << " + ";
        os << "(" << c0.str() << ")";
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

DiffOp2 gl4_generator(int k, int l) {
    if (k < 1 || k > 4 || l < 1 || l > 4) throw std::invalid_argument("gl4_generator: k,l in 1..4");
    auto x = [](int p, int q) { return Poly::variable(p == 1 ? (q == 1 ? mvar::x11 : mvar::x12)
                                                             : (q == 1 ? mvar::x21 : mvar::x22)); };
    const Poly sig_m1 = Poly::variable(mvar::sigma) - Poly(Rational(1));  // (-1 + sigma)
    DiffOp2 op;
    auto didx = [](int p, int q) { return (p - 1) * 2 + (q - 1); };

    if (k <= 2 && l <= 2) {
        // block A: e_kl = -x_l1 d_k1 - x_l2 d_k2
        op.d[size_t(didx(k, 1))] = RationalCoef4::from_poly(-x(l, 1));
        op.d[size_t(didx(k, 2))] = RationalCoef4::from_poly(-x(l, 2));
    } else if (k >= 3 && l >= 3) {
        // block D: e_{kappa+2, lambda+2} = x_{1 kappa} d_{1 lambda} + x_{2 kappa} d_{2 lambda}
        const int kk = k - 2, ll = l - 2;
        op.d[size_t(didx(1, ll))] = RationalCoef4::from_poly(x(1, kk));
        op.d[size_t(didx(2, ll))] = RationalCoef4::from_poly(x(2, kk));
    } else if (k <= 2 && l >= 3) {
        // block B: e_{k, lambda+2} = d_{k lambda} + (-1+sigma) d(det)/dx_{k lambda} / det
        const int ll = l - 2;
        op.d[size_t(didx(k, ll))] = RationalCoef4::from_poly(Poly(Rational(1)));
        Poly cof = (k == 1) ? (ll == 1 ? x(2, 2) : -x(2, 1)) : (ll == 1 ? -x(1, 2) : x(1, 1));
        op.c0 = RationalCoef4(sig_m1 * cof, 1);
    } else {
        // block C: e_{kappa+2, l} = -sum_{pq} x_{p kappa} x_{l q} d_{pq} + (-1+sigma) x_{l kappa}
        const int kk = k - 2;
        for (int p = 1; p <= 2; ++p)
            for (int q = 1; q <= 2; ++q)
                op.d[size_t(didx(p, q))] = RationalCoef4::from_poly(-(x(p, kk) * x(l, q)));
        op.c0 = RationalCoef4::from_poly(sig_m1 * x(l, kk));
    }
    return op;
}

DiffOp2 bracket_diff(const DiffOp2& A, const DiffOp2& B) {
    DiffOp2 r;
    // vector-field part and the action on the zero-order terms
    for (int j = 0; j < 4; ++j) {
        RationalCoef4 c;
        for (int i = 0; i < 4; ++i)
            c = c + A.d[size_t(i)] * B.d[size_t(j)].partial(i) -
                B.d[size_t(i)] * A.d[size_t(j)].partial(i);
        r.d[size_t(j)] = c;
    }
    RationalCoef4 c0;
    for (int i = 0; i < 4; ++i)
        c0 = c0 + A.d[size_t(i)] * B.c0.partial(i) - B.d[size_t(i)] * A.c0.partial(i);
    r.c0 = c0;
    return r;
}

CompiledMatrixOp::CompiledMatrixOp(const DiffOp2& op, Cplx sigma) {
    auto compile = [&sigma](const RationalCoef4& rc) {
        Coef out;
        out.det_pow = rc.det_pow();
        out.zero = rc.is_zero();
        for (const auto& [m, c] : rc.num().terms()) {
            Cplx coeff = to_double(c);
            for (int k = 0; k < m.e[mvar::sigma]; ++k) coeff *= sigma;
            Term t;
            t.coeff = coeff;
            t.e = {m.e[0], m.e[1], m.e[2], m.e[3]};
            // merge monomials that collide after folding sigma in
            bool merged = false;
            for (Term& prev : out.terms)
                if (prev.e == t.e) {
                    prev.coeff += t.coeff;
                    merged = true;
                    break;
                }
            if (!merged) out.terms.push_back(t);
        }
        return out;
    };
    for (int i = 0; i < 4; ++i) coefs_[size_t(i)] = compile(op.d[size_t(i)]);
    coefs_[4] = compile(op.c0);
}

Cplx CompiledMatrixOp::Coef::eval(const MatrixPoint& X) const {
    const std::array<double, 4> x = {X.x11, X.x12, X.x21, X.x22};
    Cplx total{0.0, 0.0};
    for (const Term& t : terms) {
        double mono = 1.0;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < t.e[size_t(i)]; ++k) mono *= x[size_t(i)];
        total += t.coeff * mono;
    }
    if (det_pow > 0) {
        const double d = X.det();
        for (int k = 0; k < det_pow; ++k) total /= d;
    }
    return total;
}

Cplx CompiledMatrixOp::apply(const TestFunction& F, const MatrixPoint& X) const {
    const auto g = F.partials(X);
    Cplx v{0.0, 0.0};
    for (int i = 0; i < 4; ++i)
        if (!coefs_[size_t(i)].zero) v += coefs_[size_t(i)].eval(X) * g[size_t(i)];
    if (!coefs_[4].zero) {
        const double f = F.eval(X);
        if (f != 0.0) v += coefs_[4].eval(X) * f;
    }
    return v;
}

Cplx apply_diffop(const DiffOp2& op, const TestFunction& F, const MatrixPoint& X, Cplx sigma) {
    const auto g = F.partials(X);
    const double f = F.eval(X);
    Cplx v{0.0, 0.0};
    for (int i = 0; i < 4; ++i)
        if (!op.d[size_t(i)].is_zero()) v += op.d[size_t(i)].eval(X, sigma) * g[size_t(i)];
    if (!op.c0.is_zero()) v += op.c0.eval(X, sigma) * f;
    return v;
}

}  // namespace gl2
