#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cha {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
    void expect(bool ok, std::string const& what);
};

struct VerifyConfig {
    long grid = 20;
    std::uint64_t seed = 1;
    std::string inject_fault; // suite name forced to fail, for harness tests
};

std::vector<std::string> suite_names();

// Runs every suite; `progress` (if set) is called after each one.
std::vector<SuiteResult> run_suites(VerifyConfig const& cfg,
                                    std::function<void(SuiteResult const&)> const& progress = {});

} // namespace cha
