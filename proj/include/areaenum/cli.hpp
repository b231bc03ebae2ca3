#pragma once

// Command-line front end.  run_cli is the whole program minus process
// plumbing, so tests can drive it with string vectors and inspect the exact
// bytes written to out/err.
//
// Exit codes: 0 success, 1 validation failure (bad values, failed verify
// suites), 2 numeric failure or resource limit, 64 usage errors (unknown
// flags, missing subcommand).

#include <iosfwd>
#include <string>
#include <vector>

namespace areaenum {

inline constexpr const char* kCliVersion = "1.0.0";

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace areaenum
