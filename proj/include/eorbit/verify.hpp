#pragma once
// Built-in verification suites: each runs a compact battery of internal
// consistency checks (group orders, orbit tables, product conservation,
// discrete orthogonality, transform round trips, ...) and reports pass/fail
// with a short message.  Used by the `verify` CLI subcommand.

#include <string>
#include <vector>

namespace eorbit {

struct VerifyResult {
    std::string suite;
    bool pass = false;
    std::string message;  // "ok" or the first failure description
};

// Names of all available suites, in execution order.
std::vector<std::string> verification_suite_names();

// Runs the named suites (all of them when `suites` is empty).  Unknown names
// throw std::invalid_argument.
std::vector<VerifyResult> run_verification(const std::vector<std::string>& suites = {});

}  // namespace eorbit
