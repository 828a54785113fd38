#include "gl2/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gl2/shiftop.hpp"

namespace gl2 {

using ordered_json = nlohmann::ordered_json;

void SuiteReport::add(CaseRecord c) { cases.push_back(std::move(c)); }

void SuiteReport::finalize() {
    std::stable_sort(cases.begin(), cases.end(),
                     [](const CaseRecord& a, const CaseRecord& b) { return a.key < b.key; });
    all_pass = true;
    max_rel_err = 0.0;
    for (const CaseRecord& c : cases) {
        all_pass = all_pass && c.pass;
        if (!c.negative_control) max_rel_err = std::max(max_rel_err, c.rel_err);
    }
}

bool residual_pass(double abs_err, double lhs_mag, double tol, double err_estimate) {
    return abs_err <= std::max(tol * (1.0 + lhs_mag), 3.0 * err_estimate);
}

CaseRecord make_case(std::string key, std::string desc, Cplx lhs, Cplx rhs, double err_estimate,
                     double tol) {
    CaseRecord c;
    c.key = std::move(key);
    c.desc = std::move(desc);
    c.lhs = lhs;
    c.rhs = rhs;
    c.abs_err = std::abs(lhs - rhs);
    c.rel_err = c.abs_err / (1.0 + std::abs(lhs));
    c.error_estimate = err_estimate;
    c.tolerance = tol;
    c.pass = residual_pass(c.abs_err, std::abs(lhs), tol, err_estimate);
    return c;
}

namespace {
ordered_json case_json(const CaseRecord& c) {
    ordered_json j;
    j["key"] = c.key;
    j["desc"] = c.desc;
    j["lhs_re"] = c.lhs.real();
    j["lhs_im"] = c.lhs.imag();
    j["rhs_re"] = c.rhs.real();
    j["rhs_im"] = c.rhs.imag();
    j["abs_err"] = c.abs_err;
    j["rel_err"] = c.rel_err;
    j["error_estimate"] = c.error_estimate;
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    if (c.negative_control) j["negative_control"] = true;
    return j;
}
}  // namespace

std::string reports_to_json(const std::vector<SuiteReport>& reports, std::uint64_t seed) {
    ordered_json root;
    root["schema_version"] = 1;
    root["seed"] = seed;
    ordered_json suites = ordered_json::array();
    for (const SuiteReport& r : reports) {
        ordered_json j;
        j["suite"] = r.name;
        long passed = 0, failed = 0;
        for (const CaseRecord& c : r.cases) (c.pass ? passed : failed)++;
        ordered_json summary;
        summary["cases"] = r.cases.size();
        summary["passed"] = passed;
        summary["failed"] = failed;
        summary["max_rel_err"] = r.max_rel_err;
        summary["all_pass"] = r.all_pass;
        j["summary"] = summary;
        if (!r.notes.empty()) j["notes"] = r.notes;
        ordered_json cases = ordered_json::array();
        for (const CaseRecord& c : r.cases) cases.push_back(case_json(c));
        j["cases"] = cases;
        suites.push_back(j);
    }
    root["suites"] = suites;
    return root.dump(2) + "\n";
}

void emit_report(const std::vector<SuiteReport>& reports, std::uint64_t seed,
                 const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("emit_report: cannot open " + path);
    out << reports_to_json(reports, seed);
}

std::string summary_lines(const std::vector<SuiteReport>& reports) {
    std::ostringstream os;
    for (const SuiteReport& r : reports) {
        long passed = 0, failed = 0;
        for (const CaseRecord& c : r.cases) (c.pass ? passed : failed)++;
        os << (r.all_pass ? "PASS" : "FAIL") << "  " << r.name << ": " << passed << "/"
           << r.cases.size() << " cases, max_rel_err " << r.max_rel_err << ", " << r.wall_ms
           << " ms\n";
        for (const std::string& n : r.notes) os << "      note: " << n << "\n";
    }
    return os.str();
}

std::string e_table_diff_json() {
    const ETable regen = generate_E_table();
    const ETable printed = printed_E_table();
    const auto diff = diff_E_tables(regen, printed);
    ordered_json root;
    root["schema_version"] = 1;
    root["comparison"] = "regenerated-vs-printed";
    root["mismatched_terms"] = diff.size();
    ordered_json entries = ordered_json::array();
    for (const auto& d : diff) {
        ordered_json e;
        e["generator"] = "E" + std::to_string(d.k) + std::to_string(d.l);
        e["term"] = term_key_str(d.key);
        e["regenerated"] = d.regenerated;
        e["printed"] = d.printed;
        entries.push_back(e);
    }
    root["entries"] = entries;
    ordered_json tables;
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
            const std::string name = "E" + std::to_string(k) + std::to_string(l);
            tables[name + "_regenerated"] = regen.at(k, l).str();
            tables[name + "_printed"] = printed.at(k, l).str();
        }
    root["tables"] = tables;
    return root.dump(2) + "\n";
}

}  // namespace gl2
