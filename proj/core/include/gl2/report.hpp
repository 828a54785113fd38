#pragma once

#include <string>
#include <vector>

#include "gl2/scalars.hpp"

namespace gl2 {

// One verified identity instance.  `pass` for a negative control means the
// corrupted case failed numerically, as it must.
struct CaseRecord {
    std::string key;
    std::string desc;
    Cplx lhs{0.0, 0.0};
    Cplx rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;        // abs_err / (1 + |lhs|)
    double error_estimate = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool negative_control = false;
};

struct SuiteReport {
    std::string name;
    std::vector<CaseRecord> cases;
    std::vector<std::string> notes;
    bool all_pass = true;
    double max_rel_err = 0.0;
    long wall_ms = 0;  // printed to stdout, never serialized (reports stay byte-reproducible)

    void add(CaseRecord c);
    // Sorts cases by key (order-stable assembly) and recomputes the summary.
    void finalize();
};

// Standard pass rule: residual within max(tol * (1 + |lhs|), 3 * error estimate).
bool residual_pass(double abs_err, double lhs_mag, double tol, double err_estimate);

CaseRecord make_case(std::string key, std::string desc, Cplx lhs, Cplx rhs, double err_estimate,
                     double tol);

// JSON serialization (stable schema, deterministic byte output).
std::string reports_to_json(const std::vector<SuiteReport>& reports, std::uint64_t seed);
void emit_report(const std::vector<SuiteReport>& reports, std::uint64_t seed,
                 const std::string& path);

// Human-readable one-line-per-suite summary.
std::string summary_lines(const std::vector<SuiteReport>& reports);

// Structured JSON diff of the regenerated vs printed E-table.
std::string e_table_diff_json();

}  // namespace gl2
