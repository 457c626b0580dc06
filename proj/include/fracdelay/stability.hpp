#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "fracdelay/solver.hpp"

namespace fracdelay {

// Relative slack allowed on worst_ratio against c_ml.
inline constexpr double kCertificationSlack = 0.01;

// Theta(l) = eps E_mu((Phi(l) - Phi(m))^mu) g(l) with sup |g| <= 1.
struct Perturbation {
    double eps = 0.0;
    std::uint64_t seed = 0;
    bool saturating = false;  // g == 1
    // g(l) = sum amp_k sin(freq_k (Phi(l) - Phi(m)) + phase_k), sum amp_k <= 1
    std::vector<double> amp, freq, phase;
    std::function<double(double)> theta;

    double operator()(double ell) const { return theta(ell); }
};

struct LhusCheck {
    double max_violation = 0.0;
    bool pass = false;
    // |z(l) - z(m) - int kernel Q| at the main nodes
    std::vector<double> residual;
};

struct StabilityReport {
    double eps = 0.0;
    double c_ml = 0.0;
    std::size_t trials = 0;
    std::size_t failed_trials = 0;
    double worst_ratio = 0.0;
    double history_max_dev = 0.0;
    // max over trials and nodes of d - S d and d - b*, d = |perturbed - unperturbed|
    double domination_excess = 0.0;
    double majorant_excess = 0.0;
    std::vector<double> trial_ratios;  // NaN for failed trials
    bool pass = false;
};

// c = E_mu(2 L (Phi(n) - Phi(m))^mu).
double uhml_constant(double lipschitz, double mu, const PhiFunction& phi, double m, double n);

// Seeded sinusoid mixture, or g == 1 when saturating.
Perturbation admissible_perturbation(double eps, double mu, const PhiFunction& phi, double m, double n,
                                     std::uint64_t seed, bool saturating = false);

// Theta at the main nodes of the solver grid.
std::vector<double> sample_perturbation(const VolterraSolver& solver, const Perturbation& pert);

Trajectory perturbed_solve(const ProblemSpec& spec, const Perturbation& pert, const SolverConfig& cfg);
Trajectory perturbed_solve(const VolterraSolver& solver, const Perturbation& pert, const SolverConfig& cfg);

LhusCheck verify_lhus(const Trajectory& z, const ProblemSpec& spec, const Perturbation& pert);

// Trial 0 uses the saturating direction g == 1; trial k > 0 uses seed + k.
StabilityReport verify_uhml(const ProblemSpec& spec, double eps, std::size_t trials, const SolverConfig& cfg,
                            std::uint64_t seed = 42);

// c2(l) E_mu(Gamma(mu) c3 (Phi(l) - Phi(m))^mu). DomainError if c2 decreases.
SampledFunction gronwall_majorant(const SampledFunction& c2, double c3, double mu, const PhiFunction& phi, double m);

// S b = eps E_mu((dPhi)^mu) + L int W / Gamma(mu) (b + b o f) on [m, n], 0 on the history.
std::vector<double> majorant_operator(const VolterraSolver& solver, double eps, const std::vector<double>& b);

// Fixed point of S from b0 = 0, stopped when successive iterates agree to tol
// relative in the Bielecki norm.
Trajectory majorant_fixed_point(double eps, const ProblemSpec& spec, const SolverConfig& cfg);
Trajectory majorant_fixed_point(double eps, const VolterraSolver& solver, const SolverConfig& cfg);

}  // namespace fracdelay
