#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "fracdelay/errors.hpp"

namespace fracdelay {

// Gamma for x > 0. DomainError for x <= 0 or NaN, OverflowError when the
// result is not representable.
double gamma(double x);
double log_gamma(double x);

// 1/Gamma(x) for any finite real x; exactly zero at the poles.
double rgamma(double x);

// sin(pi x) with exact zeros at the integers.
double sinpi(double x);

struct MlParams {
    double p = 1.0;
    double q = 1.0;
};

// Transformed-magnitude cap on |theta|^(1/p) for series evaluation.
inline constexpr double kMlArgumentCap = 700.0;

// One- and two-parameter Mittag-Leffler functions
//   E_p(theta)   = sum theta^k / Gamma(p k + 1)
//   E_p,q(theta) = sum theta^k / Gamma(p k + q)
// ml1(p, t) is ml2(p, 1, t) through the same code path.
double ml1(double p, double theta);
double ml2(double p, double q, double theta);
double ml2(const MlParams& params, double theta);

// Evaluation route taken by ml2, exposed for diagnostics and tests.
enum class MlRoute { zero, series, asymptotic, extended_series };
MlRoute ml2_route(double p, double q, double theta);

struct MlExtendedTable;

// Batched E_p,q for arguments with |theta| <= theta_max. Well-conditioned
// ranges use a double coefficient table and the vectorised Horner kernel.
// Otherwise each point takes the ml2 route, except that extended-precision
// series reuse coefficients computed once per batch.
class MlBatch {
public:
    MlBatch(double p, double q, double theta_max);

    bool uses_horner() const noexcept { return horner_; }
    std::size_t terms() const noexcept { return coef_.size(); }

    double operator()(double theta) const;
    void eval(const double* theta, double* out, std::size_t n) const;
    std::vector<double> eval(const std::vector<double>& theta) const;

private:
    double p_;
    double q_;
    double theta_max_;
    bool horner_ = false;
    std::vector<double> coef_;
    std::shared_ptr<const MlExtendedTable> ext_;
};

namespace testing {
// Multiplies every gamma() result by (1 + rel). Zero restores normal
// behaviour. Used by the fault-injection path of the verify command.
void set_gamma_fault(double rel);
double gamma_fault();
}  // namespace testing

}  // namespace fracdelay
