#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracdelay {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Raised when an evaluation cannot certify its tolerance.
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, std::vector<double> residuals, long node = -1)
        : std::runtime_error(what), residuals_(std::move(residuals)), node_(node) {}

    const std::vector<double>& residuals() const noexcept { return residuals_; }
    // Node index for per-node failures, -1 otherwise.
    long node() const noexcept { return node_; }

private:
    std::vector<double> residuals_;
    long node_;
};

}  // namespace fracdelay
