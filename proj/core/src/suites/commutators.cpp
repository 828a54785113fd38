#include <chrono>
#include <sstream>

#include "gl2/diffop.hpp"
#include "gl2/shiftop.hpp"
#include "gl2/suites.hpp"

namespace gl2 {

SuiteReport suite_commutators(const SuiteConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    (void)cfg;
    SuiteReport rep;
    rep.name = "commutators";

    // matrix side: [e_ab, e_cd] = delta_bc e_ad - delta_da e_cb, all 256 pairs
    {
        std::array<std::array<DiffOp2, 4>, 4> e;
        for (int k = 1; k <= 4; ++k)
            for (int l = 1; l <= 4; ++l) e[size_t(k - 1)][size_t(l - 1)] = gl4_generator(k, l);
        int ok = 0;
        std::ostringstream bad;
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                for (int c = 1; c <= 4; ++c)
                    for (int d = 1; d <= 4; ++d) {
                        DiffOp2 lhs = bracket_diff(e[size_t(a - 1)][size_t(b - 1)],
                                                   e[size_t(c - 1)][size_t(d - 1)]);
                        DiffOp2 expected;
                        if (b == c) expected = expected + e[size_t(a - 1)][size_t(d - 1)];
                        if (d == a) expected = expected - e[size_t(c - 1)][size_t(b - 1)];
                        if (lhs == expected) {
                            ++ok;
                        } else {
                            bad << " [e" << a << b << ",e" << c << d << "]";
                        }
                    }
        CaseRecord c;
        c.key = "matrix_brackets";
        c.desc = "gl4 homomorphism on Mat2(R): exact symbolic identity, 256 pairs";
        c.lhs = Cplx(ok, 0.0);
        c.rhs = Cplx(256, 0.0);
        c.pass = ok == 256;
        if (!c.pass) c.desc += " | mismatches:" + bad.str();
        rep.add(c);
    }

    // kernel side: same statement for the regenerated differential-difference table
    const ETable regen = generate_E_table();
    {
        int ok = 0;
        std::ostringstream bad;
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                for (int c = 1; c <= 4; ++c)
                    for (int d = 1; d <= 4; ++d) {
                        DiffDiffOp lhs = bracket_shift(regen.at(a, b), regen.at(c, d));
                        DiffDiffOp expected;
                        if (b == c) expected = expected + regen.at(a, d);
                        if (d == a) expected = expected - regen.at(c, b);
                        if (lhs == expected) {
                            ++ok;
                        } else {
                            bad << " [E" << a << b << ",E" << c << d << "]";
                        }
                    }
        CaseRecord c;
        c.key = "kernel_brackets";
        c.desc = "gl4 homomorphism on kernels (regenerated table): exact, 256 pairs";
        c.lhs = Cplx(ok, 0.0);
        c.rhs = Cplx(256, 0.0);
        c.pass = ok == 256;
        if (!c.pass) c.desc += " | mismatches:" + bad.str();
        rep.add(c);
    }

    // printed-vs-regenerated structured diff; a non-empty diff is not a failure
    {
        const auto diff = diff_E_tables(regen, printed_E_table());
        CaseRecord c;
        c.key = "printed_table_diff";
        std::ostringstream desc;
        desc << "term-level diff regenerated vs printed: " << diff.size() << " mismatched terms";
        c.desc = desc.str();
        c.lhs = Cplx(double(diff.size()), 0.0);
        c.rhs = c.lhs;
        c.pass = true;  // informational
        rep.add(c);
        for (const auto& d : diff) {
            std::ostringstream note;
            note << "E" << d.k << d.l << " term {" << term_key_str(d.key)
                 << "}: regenerated = " << d.regenerated << " ; printed = " << d.printed;
            rep.notes.push_back(note.str());
        }
    }

    // negative control: drop one summand of E14 and require that bracket
    // closure breaks somewhere
    {
        const DiffDiffOp e14_seed = E_seed(1, 4);
        DiffDiffOp e14_broken;
        for (const auto& [key, coef] : e14_seed.terms())
            if (key.k == 0) e14_broken.add_term(key, coef);
        bool any_mismatch = false;
        for (int c2 = 1; c2 <= 4 && !any_mismatch; ++c2)
            for (int d2 = 1; d2 <= 4 && !any_mismatch; ++d2) {
                DiffDiffOp lhs = bracket_shift(e14_broken, regen.at(c2, d2));
                DiffDiffOp expected;
                if (4 == c2) expected = expected + regen.at(1, d2);
                if (d2 == 1) expected = expected - regen.at(c2, 4);
                if (!(lhs == expected)) any_mismatch = true;
            }
        CaseRecord c;
        c.key = "zcontrol_broken_E14";
        c.desc = "corrupted E14 (summand dropped) must break bracket closure";
        c.negative_control = true;
        c.pass = any_mismatch;
        rep.add(c);
    }

    rep.finalize();
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
}

}  // namespace gl2
