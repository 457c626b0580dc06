#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fracdelay {

enum class PhiKind { identity, logarithmic, power, exponential, custom };

// Increasing scale function with derivative and, for registry kinds, a
// closed-form inverse. The power kind is the odd extension sign(l)|l|^rho.
class PhiFunction {
public:
    using Fn = std::function<double(double)>;

    static PhiFunction identity();
    static PhiFunction logarithmic();
    static PhiFunction power(double rho);
    static PhiFunction exponential();
    static PhiFunction custom(Fn eval, Fn deriv, Fn inverse = {});

    PhiKind kind() const noexcept { return kind_; }
    double exponent() const noexcept { return rho_; }
    std::string name() const;

    double operator()(double ell) const;
    double deriv(double ell) const;
    bool has_inverse() const noexcept;
    double inverse(double u) const;

    // Phi at every node.
    std::vector<double> transform(const std::vector<double>& ell) const;

private:
    PhiFunction(PhiKind kind, double rho) : kind_(kind), rho_(rho) {}

    PhiKind kind_;
    double rho_ = 1.0;
    Fn eval_, deriv_, inverse_;
};

struct SampledFunction {
    std::vector<double> grid;
    std::vector<double> values;

    // DomainError unless sizes match, size >= 2 and the grid is strictly increasing.
    void validate() const;
    std::size_t size() const noexcept { return grid.size(); }
};

SampledFunction sample(const std::vector<double>& grid, const std::function<double(double)>& f);
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

struct PhiViolation {
    std::size_t index;
    double ell;
    std::string reason;
};

// Empty when Phi' > 0 and Phi strictly increases over n equispaced samples.
std::optional<PhiViolation> validate_phi(const PhiFunction& phi, double lo, double hi, std::size_t n);

}  // namespace fracdelay
