#pragma once

#include <functional>

#include "gl2/config.hpp"
#include "gl2/report.hpp"

namespace gl2 {

SuiteReport suite_kernel_oracle(const SuiteConfig& cfg);
SuiteReport suite_main_theorem(const SuiteConfig& cfg);
SuiteReport suite_lemmas(const SuiteConfig& cfg);
SuiteReport suite_commutators(const SuiteConfig& cfg);
SuiteReport suite_lie_action(const SuiteConfig& cfg);
SuiteReport suite_intertwiner(const SuiteConfig& cfg);
SuiteReport suite_densities(const SuiteConfig& cfg);
SuiteReport suite_complex_spot(const SuiteConfig& cfg);

std::vector<std::string> suite_names(bool include_complex);
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

// Deterministic case-level parallelism: `work(i)` runs for i in [0, n) on a
// small thread pool; callers store results by index.
void parallel_cases(size_t n, int threads, const std::function<void(size_t)>& work);

}  // namespace gl2
