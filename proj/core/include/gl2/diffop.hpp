#pragma once

#include <array>
#include <string>

#include "gl2/poly.hpp"
#include "gl2/testfn.hpp"

namespace gl2 {

// Rational coefficient on Mat2(R): an exact polynomial in the matrix entries
// and sigma, divided by det^k with the det power maximally cancelled.
class RationalCoef4 {
  public:
    RationalCoef4() = default;
    RationalCoef4(Poly num, int det_pow);
    static RationalCoef4 from_poly(Poly p) { return RationalCoef4(std::move(p), 0); }

    bool is_zero() const { return num_.is_zero(); }
    const Poly& num() const { return num_; }
    int det_pow() const { return det_pow_; }

    RationalCoef4 operator+(const RationalCoef4& o) const;
    RationalCoef4 operator-(const RationalCoef4& o) const;
    RationalCoef4 operator*(const RationalCoef4& o) const;
    RationalCoef4 operator-() const;
    bool operator==(const RationalCoef4& o) const {
        return det_pow_ == o.det_pow_ && num_ == o.num_;
    }
    bool operator!=(const RationalCoef4& o) const { return !(*this == o); }

    // d/dx_pq by the quotient rule; entry in 0..3 (x11, x12, x21, x22).
    RationalCoef4 partial(int entry) const;

    Cplx eval(const MatrixPoint& X, Cplx sigma) const;

    std::string str() const;

  private:
    void canonicalize();

    Poly num_;
    int det_pow_ = 0;
};

// First-order differential operator on Mat2(R): four derivative coefficients
// plus a multiplication term, all RationalCoef4.
struct DiffOp2 {
    std::array<RationalCoef4, 4> d{};  // coefficients of d/dx11, d/dx12, d/dx21, d/dx22
    RationalCoef4 c0;

    DiffOp2 operator+(const DiffOp2& o) const;
    DiffOp2 operator-(const DiffOp2& o) const;
    DiffOp2 operator-() const;
    bool operator==(const DiffOp2& o) const;
    bool is_zero() const;
    std::string str() const;
};

// The gl_4 generator e_kl realized on functions of Mat2(R); sigma stays
// symbolic (the fifth polynomial variable).  k, l in 1..4.
DiffOp2 gl4_generator(int k, int l);

// Exact commutator [A, B] of first-order operators.
DiffOp2 bracket_diff(const DiffOp2& A, const DiffOp2& B);

// Pointwise evaluation (op F)(X) using the analytic partials of F.
Cplx apply_diffop(const DiffOp2& op, const TestFunction& F, const MatrixPoint& X, Cplx sigma);

// DiffOp2 specialized at a numeric sigma for fast per-node evaluation inside
// quadrature loops: exact rationals are folded into complex monomial
// coefficients once.
class CompiledMatrixOp {
  public:
    CompiledMatrixOp(const DiffOp2& op, Cplx sigma);

    // (op F)(X) evaluated from F's value and analytic partials
    Cplx apply(const TestFunction& F, const MatrixPoint& X) const;

  private:
    struct Term {
        Cplx coeff;
        std::array<int16_t, 4> e;  // exponents of x11, x12, x21, x22
    };
    struct Coef {
        std::vector<Term> terms;
        int det_pow = 0;
        bool zero = true;

        Cplx eval(const MatrixPoint& X) const;
    };
    std::array<Coef, 5> coefs_;  // d11, d12, d21, d22, multiplication term
};

}  // namespace gl2
