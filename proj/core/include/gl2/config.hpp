#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gl2/scalars.hpp"
#include "gl2/testfn.hpp"

namespace gl2 {

// Harness configuration: test-function descriptors, spectral samples, grids,
// quadrature rules and per-suite tolerances.  A plain-text key-value file
// with [section] headers; defaults are compiled in so a zero-argument run
// works from any directory.
struct SuiteConfig {
    struct MuSample {
        Cplx mu1, mu2;
    };
    struct TestFnDesc {
        MatrixPoint center;
        std::array<double, 4> radii;
    };

    std::uint64_t seed = 20250809;
    int threads = 0;  // 0 = hardware concurrency
    bool fast = false;
    bool complex_enabled = false;

    double t_max = 2.0;
    std::vector<TestFnDesc> test_functions;
    double section_center = 0.25;
    double section_halfwidth = 1.5;

    std::vector<MuSample> mu_samples;
    std::vector<Cplx> sigma_samples;
    std::vector<std::pair<Parity, Parity>> parities;

    // quadrature rules
    int kernel_order = 24, kernel_panels = 2;
    int oracle_kernel_order = 16;
    int direct_order = 12, direct_panels = 2;
    int oracle_s_order = 12, oracle_s_panels = 2;
    int singular_order = 16;
    long qmc_points = 1L << 18;
    int qmc_replicates = 8;

    // kernel-oracle
    double tol_kernel_oracle = 1e-6;
    std::vector<double> ko_t;

    // main-theorem; evaluation points are explicit (t, s) pairs chosen
    // inside the kernel support of at least one test function
    double tol_main = 1e-7;
    double tol_main_diag = 1e-9;
    std::vector<std::pair<double, double>> mt_ts;

    // lemma identities
    double tol_lemmas = 1e-8;
    std::vector<std::pair<double, double>> lm_ts;

    // lie action
    double tol_lie = 1e-8;
    double tol_lie_complex = 1e-6;
    std::vector<double> lie_t;
    double lie_epsilon = 0.02;

    // intertwiner
    double tol_intertwiner = 1e-4;
    std::vector<MuSample> iw_mu;
    std::vector<double> iw_t;

    // densities
    int density_grid_points = 101;
    double density_grid_halfwidth = 3.0;
    double tol_density_limit = 1e-10;

    // complex spot checks
    Cplx cs_t{0.15, 0.1}, cs_s{0.1, 0.02};
    Cplx cs_mu1{0.2, 0.5}, cs_mu1p{-0.8, 0.5}, cs_mu2{-0.3, -0.4}, cs_mu2p{0.7, -0.4};
    Cplx cs_sigma{0.0, 0.3}, cs_sigmap{0.0, -0.2};
    double cs_radius = 0.2;

    static SuiteConfig defaults();
    static SuiteConfig parse(const std::string& text);
    static SuiteConfig from_file(const std::string& path);

    // Renders the configuration in the file format (the checked-in
    // config/default.cfg is exactly defaults().to_text()).
    std::string to_text() const;

    // Reduced grids and orders for smoke runs.
    void apply_fast();

    // Checks the documented invariants (mu1 != mu2, grids inside certifiable
    // windows, ...) and throws ConfigError on violation.
    void validate() const;

    int effective_threads() const;
};

Cplx parse_complex(const std::string& text);
std::string format_complex(Cplx z);

}  // namespace gl2
