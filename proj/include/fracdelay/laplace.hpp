#pragma once

#include <functional>
#include <optional>

#include "fracdelay/phi.hpp"
#include "fracdelay/product_rule.hpp"

namespace fracdelay {

struct TransformQuery {
    double lambda = 1.0;
    double horizon = 0.0;  // truncation endpoint T > m
    double tol = 1e-10;    // absolute quadrature tolerance

    // DomainError unless lambda > 0, horizon > m and tol > 0.
    void validate(double m) const;
};

// Declared growth bound |z(l)| <= scale * exp(rate (Phi(l) - Phi(m))).
struct Envelope {
    double scale = 1.0;
    double rate = 0.0;
};

struct TransformResult {
    double value = 0.0;
    double error_estimate = 0.0;
    // Bound on the neglected tail beyond the horizon; infinite without an envelope.
    double tail_bound = 0.0;
};

// Truncated generalized Laplace transform
//   int_m^T exp(-lambda (Phi(l) - Phi(m))) z(l) Phi'(l) dl
// computed in u = Phi(l) by tanh-sinh panels. AccuracyError when the
// estimated quadrature error exceeds query.tol.
TransformResult glt(const std::function<double(double)>& z, const PhiFunction& phi, double m,
                    const TransformQuery& query, std::optional<Envelope> envelope = std::nullopt);

// Transform of sampled data over the sampled range: cubic interpolation in u
// with starting corrections for the declared behaviour at m.
double glt(const SampledFunction& z, const PhiFunction& phi, double m, double lambda,
           const StartBehaviour& start = {});

// Smallest horizon whose envelope tail stays below tol / 10.
double envelope_horizon(const PhiFunction& phi, double m, double lambda, const Envelope& envelope, double tol);

// Generalized convolution
//   int_m^l Phi'(e) z1(e) z2(Phi^-1(Phi(l) + Phi(m) - Phi(e))) de
// at every node of z1's grid. z2 is interpolated in u when its nodes do not
// line up with the reflected arguments. DomainError when Phi has no inverse
// or a reflected argument falls outside z2's sampled range.
SampledFunction phi_convolve(const SampledFunction& z1, const SampledFunction& z2, const PhiFunction& phi, double m,
                             const StartBehaviour& start1 = {}, const StartBehaviour& start2 = {});

}  // namespace fracdelay
