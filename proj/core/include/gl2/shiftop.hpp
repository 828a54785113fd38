#pragma once

#include <map>
#include <string>
#include <vector>

#include "gl2/poly.hpp"
#include "gl2/principal.hpp"

namespace gl2 {

// Rational coefficient of a kernel-side operator term: an exact polynomial
// in (mu1, mu2, sigma, t, s) divided by a product of integer translates of
// (mu1 - mu2).  The denominator is stored as the multiset {m: multiplicity}
// of factors (mu1 - mu2 - m); the fraction is kept maximally cancelled, which
// makes equality a plain structural comparison.
class ShiftCoef {
  public:
    ShiftCoef() = default;
    ShiftCoef(Poly num, std::map<long, int> den);
    static ShiftCoef from_poly(Poly p) { return ShiftCoef(std::move(p), {}); }
    static ShiftCoef constant(long num, long den = 1) {
        return from_poly(Poly(Rational(num, den)));
    }

    bool is_zero() const { return num_.is_zero(); }
    const Poly& num() const { return num_; }
    const std::map<long, int>& den() const { return den_; }

    ShiftCoef operator+(const ShiftCoef& o) const;
    ShiftCoef operator-(const ShiftCoef& o) const;
    ShiftCoef operator*(const ShiftCoef& o) const;
    ShiftCoef operator-() const;
    bool operator==(const ShiftCoef& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const ShiftCoef& o) const { return !(*this == o); }

    // Substitution mu1 -> mu1 + j, mu2 -> mu2 + k (the shift commutation rule).
    ShiftCoef mu_shifted(int j, int k) const;

    ShiftCoef dt() const { return ShiftCoef(num_.derivative(kvar::t), den_); }
    ShiftCoef ds() const { return ShiftCoef(num_.derivative(kvar::s), den_); }

    // Throws PoleError when a denominator factor vanishes at (mu1, mu2).
    Cplx eval(Cplx mu1, Cplx mu2, Cplx sigma, double t, double s) const;

    std::string str() const;

  private:
    void canonicalize();

    Poly num_;
    std::map<long, int> den_;
};

// Key of one canonical term: derivative orders in t and s and the shift
// exponents (j, k) of V1^j V2^k.  Coefficients always sit left of the
// derivative and shift parts.
struct TermKey {
    int dt = 0, ds = 0, j = 0, k = 0;
    bool operator<(const TermKey& o) const {
        return std::tie(dt, ds, j, k) < std::tie(o.dt, o.ds, o.j, o.k);
    }
    bool operator==(const TermKey& o) const {
        return dt == o.dt && ds == o.ds && j == o.j && k == o.k;
    }
};

// Finite sum of terms coef(mu1,mu2,sigma,t,s) * dt^a ds^b * V1^j V2^k in
// collected canonical form with exact coefficient equality.
class DiffDiffOp {
  public:
    DiffDiffOp() = default;

    void add_term(const TermKey& key, const ShiftCoef& c);
    const std::map<TermKey, ShiftCoef>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_deriv_order() const;

    DiffDiffOp operator+(const DiffDiffOp& o) const;
    DiffDiffOp operator-(const DiffDiffOp& o) const;
    DiffDiffOp operator-() const;
    bool operator==(const DiffDiffOp& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiffDiffOp& o) const { return !(*this == o); }

    std::string str() const;

  private:
    std::map<TermKey, ShiftCoef> terms_;
};

// Operator composition honoring V1^j V2^k . c(mu1,mu2) = c(mu1+j,mu2+k) . V1^j V2^k
// and the Leibniz rule for the derivative parts.
DiffDiffOp compose_shift(const DiffDiffOp& A, const DiffDiffOp& B);
DiffDiffOp bracket_shift(const DiffDiffOp& A, const DiffDiffOp& B);

// Seed operators: the eight diagonal-block generators plus E14 and E32
// (throws for other indices).
DiffDiffOp E_seed(int k, int l);

// The printed sixteen-entry table (the cross-check target).
DiffDiffOp E_printed(int k, int l);

struct ETable {
    // op[k-1][l-1] is E_kl
    std::array<std::array<DiffDiffOp, 4>, 4> op;
    const DiffDiffOp& at(int k, int l) const { return op[size_t(k - 1)][size_t(l - 1)]; }
};

// Regenerates the full table from the seeds via commutators:
// E13=[E14,E43], E23=[E21,E13], E24=[E21,E14], E31=[E32,E21], E41=[E43,E31],
// E42=[E43,E32].
ETable generate_E_table();
ETable printed_E_table();

// Term-level symbolic diff between two tables (empty means exact match).
struct ETableDiffEntry {
    int k = 0, l = 0;
    TermKey key;
    std::string regenerated;  // "absent" when the term is missing
    std::string printed;
};
std::vector<ETableDiffEntry> diff_E_tables(const ETable& regenerated, const ETable& printed);

// Numeric application of a differential-difference operator to the kernel
// family: each term is evaluated through kernel_K / kernel_K_dt / kernel_K_ds
// at the shifted parameters and summed with its coefficient value.
// Requires every term to be at most first order in the derivatives.
Cplx apply_diffdiff(const DiffDiffOp& op, const KernelFamily& fam, double t, double s,
                    bool fine = false);

std::string term_key_str(const TermKey& key);

}  // namespace gl2
