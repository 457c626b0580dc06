#pragma once

#include <string>
#include <vector>

namespace fracdelay {

struct IdentityCheck {
    std::string suite;
    std::string name;
    double error = 0.0;
    double tol = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

// Named identity suites: "special", "calculus", "laplace", or "all" for the
// three in that order. DomainError for an unknown name. Evaluation failures
// are recorded as failed rows with an infinite error.
std::vector<IdentityCheck> run_verify_suite(const std::string& suite);

// Fixed-width pass/fail table, one row per check, with a summary line.
std::string format_checks(const std::vector<IdentityCheck>& checks);

}  // namespace fracdelay
