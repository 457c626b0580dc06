#pragma once

#include "fracdelay/phi.hpp"
#include "fracdelay/product_rule.hpp"

namespace fracdelay {

// Phi-fractional Riemann-Liouville integral of order mu in (0, 1] anchored at
// m = z.grid[0], evaluated at every node. Data that behave like powers of
// (Phi - Phi(m)) near m should declare the exponent through `start`.
SampledFunction frac_integral(const SampledFunction& z, double mu, const PhiFunction& phi, double m,
                              const StartBehaviour& start = {});

// Phi-Caputo derivative of order mu in (0, 1): d/du of the order 1 - mu
// integral of z - z(m), differentiated in u = Phi by five-point finite
// differences. Accuracy degrades near m.
SampledFunction caputo_derivative(const SampledFunction& z, double mu, const PhiFunction& phi, double m,
                                  const StartBehaviour& start = {});

// Derivative in u = Phi(l) of sampled data (five-point, one-sided at the ends).
// Near u[0] the stencils are exact for 1 and the powers (u - u[0])^e of the
// leading `exponents` (ascending, at least one above zero) instead of
// polynomials.
std::vector<double> phi_derivative(const std::vector<double>& u, const std::vector<double>& values,
                                   const std::vector<double>& exponents = {});

}  // namespace fracdelay
