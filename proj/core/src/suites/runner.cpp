#include <atomic>
#include <mutex>
#include <thread>

#include "gl2/suites.hpp"

namespace gl2 {

void parallel_cases(size_t n, int threads, const std::function<void(size_t)>& work) {
    if (n == 0) return;
    const int nt = std::max(1, std::min<int>(threads, int(n)));
    if (nt == 1) {
        for (size_t i = 0; i < n; ++i) work(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                work(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(size_t(nt));
    for (int k = 0; k < nt; ++k) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::vector<std::string> suite_names(bool include_complex) {
    std::vector<std::string> names = {"kernel-oracle", "main-theorem", "lemmas",    "commutators",
                                      "lie-action",    "intertwiner",  "densities"};
    if (include_complex) names.push_back("complex-spot");
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (name == "kernel-oracle") return suite_kernel_oracle(cfg);
    if (name == "main-theorem") return suite_main_theorem(cfg);
    if (name == "lemmas") return suite_lemmas(cfg);
    if (name == "commutators") return suite_commutators(cfg);
    if (name == "lie-action") return suite_lie_action(cfg);
    if (name == "intertwiner") return suite_intertwiner(cfg);
    if (name == "densities") return suite_densities(cfg);
    if (name == "complex-spot") return suite_complex_spot(cfg);
    throw ConfigError("unknown suite: " + name);
}

}  // namespace gl2
