#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "gl2/report.hpp"
#include "gl2/suites.hpp"

using namespace gl2;

TEST_CASE("complex literal parser") {
    CHECK(parse_complex("0.3+0.7i") == Cplx{0.3, 0.7});
    CHECK(parse_complex("-0.2-0.1i") == Cplx{-0.2, -0.1});
    CHECK(parse_complex("1i") == Cplx{0.0, 1.0});
    CHECK(parse_complex("-i") == Cplx{0.0, -1.0});
    CHECK(parse_complex("2.5") == Cplx{2.5, 0.0});
    CHECK(parse_complex("1e-3i") == Cplx{0.0, 1e-3});
    CHECK(parse_complex("1e-2+2e-3i") == Cplx{1e-2, 2e-3});
}

TEST_CASE("config: defaults validate, text roundtrip preserves fields") {
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.validate();
    const std::string text = cfg.to_text();
    const SuiteConfig back = SuiteConfig::parse(text);
    CHECK(back.seed == cfg.seed);
    CHECK(back.t_max == cfg.t_max);
    CHECK(back.mu_samples.size() == cfg.mu_samples.size());
    CHECK(back.mu_samples[0].mu1 == cfg.mu_samples[0].mu1);
    CHECK(back.kernel_order == cfg.kernel_order);
    CHECK(back.tol_main_diag == cfg.tol_main_diag);
    CHECK(back.ko_t == cfg.ko_t);
    CHECK(back.parities == cfg.parities);
    CHECK(back.cs_mu1p == cfg.cs_mu1p);
}

TEST_CASE("config: invariant violations are rejected") {
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.mu_samples[0].mu2 = cfg.mu_samples[0].mu1;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    SuiteConfig cfg2 = SuiteConfig::defaults();
    cfg2.ko_t.push_back(5.0);  // outside the certifiable window
    CHECK_THROWS_AS(cfg2.validate(), ConfigError);

    CHECK_THROWS_AS(SuiteConfig::parse("[parities]\nclasses = 3"), ConfigError);
    CHECK_THROWS_AS(SuiteConfig::parse("oops"), ConfigError);
}

TEST_CASE("report: empty list is a valid report; serialization is stable") {
    const std::string j = reports_to_json({}, 42);
    CHECK(j.find("\"schema_version\": 1") != std::string::npos);
    CHECK(j.find("\"suites\": []") != std::string::npos);
    CHECK(reports_to_json({}, 42) == j);
}

TEST_CASE("densities suite passes and carries a working negative control") {
    SuiteConfig cfg = SuiteConfig::defaults();
    const SuiteReport rep = suite_densities(cfg);
    CHECK(rep.all_pass);
    int controls = 0;
    for (const auto& c : rep.cases)
        if (c.negative_control) {
            ++controls;
            CHECK(c.pass);
        }
    CHECK(controls >= 1);
}

TEST_CASE("lie action suite passes") {
    SuiteConfig cfg = SuiteConfig::defaults();
    const SuiteReport rep = suite_lie_action(cfg);
    INFO(summary_lines({rep}));
    CHECK(rep.all_pass);
}

TEST_CASE("commutator suite: 512 exact brackets, diff report confined to E24") {
    SuiteConfig cfg = SuiteConfig::defaults();
    const SuiteReport rep = suite_commutators(cfg);
    CHECK(rep.all_pass);
    for (const auto& n : rep.notes) CHECK(n.find("E24") == 0);
    CHECK(!rep.notes.empty());
}

TEST_CASE("intertwiner suite passes and is deterministic") {
    SuiteConfig cfg = SuiteConfig::defaults();
    SuiteReport a = suite_intertwiner(cfg);
    SuiteReport b = suite_intertwiner(cfg);
    CHECK(a.all_pass);
    a.wall_ms = b.wall_ms = 0;
    CHECK(reports_to_json({a}, cfg.seed) == reports_to_json({b}, cfg.seed));
}

TEST_CASE("emit_report writes the JSON file") {
    SuiteConfig cfg = SuiteConfig::defaults();
    const SuiteReport rep = suite_densities(cfg);
    const std::string path = "/tmp/gl2_test_report.json";
    emit_report({rep}, cfg.seed, path);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line == "{");
    std::remove(path.c_str());
}

TEST_CASE("e_table_diff_json is structured and non-empty") {
    const std::string j = e_table_diff_json();
    CHECK(j.find("\"comparison\": \"regenerated-vs-printed\"") != std::string::npos);
    CHECK(j.find("E24") != std::string::npos);
}

TEST_CASE("suite registry") {
    CHECK(suite_names(false).size() == 7);
    CHECK(suite_names(true).size() == 8);
    SuiteConfig cfg = SuiteConfig::defaults();
    CHECK_THROWS_AS(run_suite("bogus", cfg), ConfigError);
}
