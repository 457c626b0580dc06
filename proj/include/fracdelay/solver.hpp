#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "fracdelay/phi.hpp"

namespace fracdelay {

using RightHandSide = std::function<double(double ell, double now, double delayed)>;
using ScalarFn = std::function<double(double)>;

// Multi-term delay problem
//   D^mu z + rho D^kappa z = Q(l, z(l), z(f(l))) on [m, n],  z = alpha on [m - sigma, m]
// with Phi-Caputo derivatives, solved through its integral form.
struct ProblemSpec {
    double mu = 0.5;
    double kappa = 0.25;
    double rho = 1.0;
    double sigma = 0.5;
    double m = 1.0;
    double n = 2.0;
    PhiFunction phi = PhiFunction::identity();
    RightHandSide Q;
    double lipschitz = 1.0;  // declared L_Q in |dQ| <= L (|du| + |dv|)
    ScalarFn delay;          // f
    ScalarFn alpha;          // history

    // Structural checks; DomainError naming the violated condition.
    void validate() const;
};

struct Trajectory {
    std::vector<double> grid;
    std::vector<double> values;
    std::size_t history_len = 0;  // index of the node at m

    std::size_t size() const noexcept { return grid.size(); }
};

struct SolverConfig {
    std::size_t n_nodes = 512;
    double tol = 1e-10;
    std::size_t max_iter = 200;
    std::optional<double> beta;  // default 2 L + 1

    double resolved_beta(double lipschitz) const { return beta ? *beta : 2.0 * lipschitz + 1.0; }
    // DomainError unless n_nodes >= 16, tol > 0, max_iter >= 1 and beta > 2 L.
    void validate(double lipschitz) const;
};

struct PicardResult {
    Trajectory trajectory;
    std::size_t iterations = 0;
    double final_residual = 0.0;
    std::vector<double> residuals;  // Bielecki norm of successive differences
    std::vector<double> ratios;     // residuals[k] / residuals[k-1]
};

// Node weights of int_m^l K(l, e) g(e) de for g piecewise linear in u = Phi,
// K = Phi'(e) (Phi(l) - Phi(e))^(mu-1) E_{p,mu}(-rho (Phi(l) - Phi(e))^p).
// With rho = 0 the kernel is the Abel weight (.)^(mu-1) / Gamma(mu).
class ProductWeights {
public:
    ProductWeights(const std::vector<double>& u, double mu, double p, double rho);

    std::size_t size() const noexcept { return n_; }
    const double* row(std::size_t i) const { return w_.data() + i * (i + 1) / 2; }
    double apply_row(std::size_t i, const double* g) const;

private:
    std::size_t n_;
    std::vector<double> w_;
};

// Solver bound to one problem and grid. Weights are computed once and shared
// by every sweep; the object is immutable after construction.
class VolterraSolver {
public:
    VolterraSolver(ProblemSpec spec, std::size_t n_nodes);

    const ProblemSpec& spec() const noexcept { return spec_; }
    const std::vector<double>& grid() const noexcept { return grid_; }
    std::size_t history_len() const noexcept { return hist_; }
    std::size_t main_nodes() const noexcept { return grid_.size() - hist_; }
    // Phi(l) - Phi(m) at main node j.
    double delta_phi(std::size_t j) const { return du_[j]; }

    Trajectory initial_guess() const;
    Trajectory linear_solution(const std::vector<double>& h_main, double alpha_at_m) const;

    // P z, optionally with an extra forcing added to Q at the main nodes.
    Trajectory apply_P(const Trajectory& z, const std::vector<double>* forcing = nullptr) const;

    PicardResult picard(const SolverConfig& cfg, const std::vector<double>* forcing = nullptr) const;
    Trajectory march(const SolverConfig& cfg) const;

    double bielecki_norm(const Trajectory& diff, double beta) const;
    // Weights E_mu(beta (Phi(max(l, m)) - Phi(m))^mu) at every node.
    std::vector<double> bielecki_weights(double beta) const;

    // Value of z at f(l_j) for main node j, by linear interpolation.
    double delayed(const std::vector<double>& values, std::size_t j) const;

    // Abel-weight integral L int W / Gamma(mu) (b + b o f) at the main nodes.
    std::vector<double> abel_sweep(const std::vector<double>& b, double lipschitz) const;

    const ProductWeights& kernel_weights() const noexcept { return kw_; }

private:
    void check_trajectory(const Trajectory& z) const;

    ProblemSpec spec_;
    std::vector<double> grid_;
    std::size_t hist_;
    std::vector<double> du_;
    std::vector<std::size_t> dk_;
    std::vector<double> dt_;
    ProductWeights kw_;
    ProductWeights abel_;
};

double kernel(double ell, double eta, const ProblemSpec& spec);
Trajectory linear_solution(const SampledFunction& h, double alpha_at_m, const ProblemSpec& spec, std::size_t n_nodes);
Trajectory apply_P(const Trajectory& z, const ProblemSpec& spec);
PicardResult picard_solve(const ProblemSpec& spec, const SolverConfig& cfg);
Trajectory march_solve(const ProblemSpec& spec, const SolverConfig& cfg);
double bielecki_norm(const Trajectory& diff, double beta, double mu, const PhiFunction& phi, double m);
bool contraction_certificate(double lipschitz, double beta);

// Worked example: mu = 0.5, kappa = 0.45, rho = 1, f(l) = l - sigma,
// Q = sin(l)/2 (z + sqrt(1 + z^2)) + sin(z(l - sigma)), L_Q = 1,
// on [1, 2] with sigma = 0.5, alpha = 1 and identity Phi.
double reference_rhs(double ell, double now, double delayed);
ProblemSpec reference_problem();

}  // namespace fracdelay
