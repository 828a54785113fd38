// Command-line driver for the GL2(R) operational-calculus verification
// suites.  Subcommands select one suite (or `all`); reports are printed as a
// summary on stdout and optionally written as JSON.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gl2/report.hpp"
#include "gl2/suites.hpp"

namespace {

struct Options {
    std::string config_path;
    std::string out_path;
    std::string suite_filter;
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool fast = false;
    bool with_complex = false;
    int threads = 0;
};

int run(const std::vector<std::string>& suites, const Options& opt) {
    gl2::SuiteConfig cfg =
        opt.config_path.empty() ? gl2::SuiteConfig::defaults() : gl2::SuiteConfig::from_file(opt.config_path);
    if (opt.seed_set) cfg.seed = opt.seed;
    if (opt.threads > 0) cfg.threads = opt.threads;
    if (opt.fast) cfg.apply_fast();
    cfg.complex_enabled = opt.with_complex;
    cfg.validate();

    std::vector<gl2::SuiteReport> reports;
    bool ok = true;
    for (const std::string& name : suites) {
        gl2::SuiteReport rep = gl2::run_suite(name, cfg);
        ok = ok && rep.all_pass;
        reports.push_back(std::move(rep));
    }
    std::cout << gl2::summary_lines(reports);
    if (!opt.out_path.empty()) {
        gl2::emit_report(reports, cfg.seed, opt.out_path);
        std::cout << "report written to " << opt.out_path << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification harness for the operational calculus on GL2(R)"};
    app.require_subcommand(1);
    app.fallthrough(true);

    Options opt;
    app.add_option("--config", opt.config_path, "configuration file (defaults are compiled in)");
    app.add_option("--out", opt.out_path, "write the JSON report to this path");
    auto* seed_opt = app.add_option("--seed", opt.seed, "override the RNG seed");
    app.add_flag("--fast", opt.fast, "reduced grids and orders (smoke run)");
    app.add_flag("--complex", opt.with_complex, "enable the GL2(C) suites in `all`");
    app.add_option("--threads", opt.threads, "worker threads (0 = hardware)");

    std::vector<std::string> requested;
    for (const std::string& name : gl2::suite_names(true)) {
        auto* sub = app.add_subcommand(name, "run the " + name + " suite");
        sub->callback([&requested, name]() { requested.push_back(name); });
    }
    auto* all = app.add_subcommand("all", "run every suite (GL2(C) suites with --complex)");
    all->callback([&requested, &opt]() {
        for (const std::string& name : gl2::suite_names(opt.with_complex))
            requested.push_back(name);
    });
    auto* dump = app.add_subcommand("dump-config", "print the default configuration file");
    bool dump_requested = false;
    dump->callback([&dump_requested]() { dump_requested = true; });

    CLI11_PARSE(app, argc, argv);
    opt.seed_set = seed_opt->count() > 0;

    try {
        if (dump_requested) {
            std::cout << gl2::SuiteConfig::defaults().to_text();
            return 0;
        }
        return run(requested, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
