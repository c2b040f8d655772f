#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace masi {

struct SelftestOptions {
    /// Deliberately perturbs one comparison so the failure path is exercised
    /// (negative control for CI).
    bool inject_fault = false;
};

struct SuiteResult {
    std::string suite;
    int checks = 0;
    int failures = 0;
    double worst_residual = 0.0; ///< residual of the closest-to-tolerance check
    std::string worst_check;
    std::vector<std::string> failed_checks;
};

struct SelftestReport {
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;

    bool passed() const;
    int total_checks() const;
    int total_failures() const;
};

/// Runs the property suites of every module with deterministic seeding.
SelftestReport run_selftest(std::uint64_t seed, const SelftestOptions& options = {});

} // namespace masi
