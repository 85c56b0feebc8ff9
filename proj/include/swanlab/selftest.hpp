#pragma once

// Self-contained property suites. Each suite is deterministic (fixed
// seeds), exact, and returns a machine-checkable result; the CLI
// `selftest` command and the acceptance runner are thin layers over
// these functions.

#include <string>
#include <vector>

namespace swanlab {

struct SuiteResult {
    std::string name;
    bool passed = true;
    unsigned long checks = 0;
    std::string detail;  // first failure, empty when passed
};

// Names in execution order.
std::vector<std::string> selftest_suite_names();

// Runs one suite by name; ConfigError for unknown names.
SuiteResult run_selftest_suite(const std::string& name);

// Runs the given suites (all when empty), in the canonical order.
std::vector<SuiteResult> run_selftests(const std::vector<std::string>& names);

}  // namespace swanlab
