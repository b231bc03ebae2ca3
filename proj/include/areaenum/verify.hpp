#pragma once

// Named invariant suites shared by the `verify` subcommand and the
// acceptance runner.  Each suite bundles one family of cross-checks over the
// library (engine agreement, sum rules, spectral identities, ...) and
// reports a single pass/fail with a short summary.

#include <string>
#include <vector>

namespace areaenum {

struct SuiteResult {
    std::string name;
    bool passed = false;
    double seconds = 0;
    std::string detail;  // summary when passing, first failing check otherwise
};

/// Suite names in canonical execution order.
std::vector<std::string> verify_suite_names();

/// Run one suite by name.  workers steers the enumeration engines where they
/// parallelize; 0 means a library-chosen default.  Unknown names throw
/// std::invalid_argument.
SuiteResult run_verify_suite(const std::string& name, int workers = 0);

/// Every suite, canonical order.
std::vector<SuiteResult> run_all_verify_suites(int workers = 0);

}  // namespace areaenum
