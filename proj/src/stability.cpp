#include "fracdelay/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "fracdelay/errors.hpp"
#include "fracdelay/special_functions.hpp"

namespace fracdelay {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr std::size_t kMaxWaves = 5;
constexpr double kLhusSlack = 1e-6;

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

double uhml_constant(double lipschitz, double mu, const PhiFunction& phi, double m, double n) {
    if (!(lipschitz > 0.0)) throw DomainError("Lipschitz constant must be > 0");
    if (!(m < n)) throw DomainError("interval must satisfy m < n");
    if (!(mu > 0.0 && mu <= 1.0)) throw DomainError("order must lie in (0, 1]");
    return ml1(mu, 2.0 * lipschitz * std::pow(phi(n) - phi(m), mu));
}

Perturbation admissible_perturbation(double eps, double mu, const PhiFunction& phi, double m, double n,
                                     std::uint64_t seed, bool saturating) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("perturbation amplitude must be > 0");
    if (!(m < n)) throw DomainError("interval must satisfy m < n");
    Perturbation p;
    p.eps = eps;
    p.seed = seed;
    p.saturating = saturating;
    const double u0 = phi(m);
    if (!saturating) {
        std::mt19937_64 rng(seed);
        const std::size_t waves = 1 + static_cast<std::size_t>(rng() % kMaxWaves);
        const double span = phi(n) - u0;
        double total = 0.0;
        for (std::size_t k = 0; k < waves; ++k) {
            p.amp.push_back(0.1 + unit(rng));
            p.freq.push_back(kTwoPi * (0.25 + 2.75 * unit(rng)) / span);
            p.phase.push_back(kTwoPi * unit(rng));
            total += p.amp.back();
        }
        for (double& a : p.amp) a /= total;
    }
    p.theta = [eps, mu, phi, m, u0, amp = p.amp, freq = p.freq, phase = p.phase](double ell) {
        const double d = ell <= m ? 0.0 : phi(ell) - u0;
        const double env = eps * ml1(mu, std::pow(d, mu));
        if (amp.empty()) return env;
        double g = 0.0;
        for (std::size_t k = 0; k < amp.size(); ++k) g += amp[k] * std::sin(freq[k] * d + phase[k]);
        return env * g;
    };
    return p;
}

std::vector<double> sample_perturbation(const VolterraSolver& solver, const Perturbation& pert) {
    std::vector<double> f(solver.main_nodes());
    for (std::size_t j = 0; j < f.size(); ++j) f[j] = pert(solver.grid()[solver.history_len() + j]);
    return f;
}

Trajectory perturbed_solve(const VolterraSolver& solver, const Perturbation& pert, const SolverConfig& cfg) {
    const auto f = sample_perturbation(solver, pert);
    const bool null = std::all_of(f.begin(), f.end(), [](double v) { return v == 0.0; });
    return solver.picard(cfg, null ? nullptr : &f).trajectory;
}

Trajectory perturbed_solve(const ProblemSpec& spec, const Perturbation& pert, const SolverConfig& cfg) {
    cfg.validate(spec.lipschitz);
    return perturbed_solve(VolterraSolver(spec, cfg.n_nodes), pert, cfg);
}

LhusCheck verify_lhus(const Trajectory& z, const ProblemSpec& spec, const Perturbation& pert) {
    if (z.history_len >= z.size()) throw DomainError("trajectory has no main segment");
    const VolterraSolver solver(spec, z.size() - z.history_len);
    if (solver.grid() != z.grid) throw DomainError("trajectory grid does not match the solver grid");
    const Trajectory pz = solver.apply_P(z);
    const double zm = z.values[z.history_len];
    const double am = spec.alpha(spec.m);
    const double u0 = spec.phi(spec.m);
    const double c = uhml_constant(spec.lipschitz, spec.mu, spec.phi, spec.m, spec.n);
    LhusCheck r;
    r.residual.resize(solver.main_nodes());
    r.max_violation = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < r.residual.size(); ++j) {
        const std::size_t k = z.history_len + j;
        // P z = alpha(m) + int kernel Q
        const double res = std::fabs(z.values[k] - zm - (pz.values[k] - am));
        r.residual[j] = res;
        const double bound = pert.eps * ml1(spec.mu, std::pow(spec.phi(z.grid[k]) - u0, spec.mu));
        r.max_violation = std::max(r.max_violation, res - bound);
    }
    r.pass = r.max_violation <= kLhusSlack * pert.eps * c;
    return r;
}

std::vector<double> majorant_operator(const VolterraSolver& solver, double eps, const std::vector<double>& b) {
    const auto& spec = solver.spec();
    const std::size_t H = solver.history_len();
    const auto sweep = solver.abel_sweep(b, spec.lipschitz);
    std::vector<double> out(solver.grid().size(), 0.0);
    for (std::size_t j = 0; j < sweep.size(); ++j)
        out[H + j] = eps * ml1(spec.mu, std::pow(solver.delta_phi(j), spec.mu)) + sweep[j];
    return out;
}

Trajectory majorant_fixed_point(double eps, const VolterraSolver& solver, const SolverConfig& cfg) {
    const auto& spec = solver.spec();
    cfg.validate(spec.lipschitz);
    if (!(eps >= 0.0) || !std::isfinite(eps)) throw DomainError("majorant amplitude must be >= 0");
    const auto w = solver.bielecki_weights(cfg.resolved_beta(spec.lipschitz));
    std::vector<double> b(solver.grid().size(), 0.0);
    std::vector<double> residuals;
    for (std::size_t it = 1; it <= cfg.max_iter; ++it) {
        std::vector<double> next = majorant_operator(solver, eps, b);
        double dn = 0.0, nn = 0.0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            dn = std::max(dn, std::fabs(next[k] - b[k]) / w[k]);
            nn = std::max(nn, std::fabs(next[k]) / w[k]);
        }
        b = std::move(next);
        residuals.push_back(dn);
        if (dn <= cfg.tol * nn) return Trajectory{solver.grid(), b, solver.history_len()};
    }
    throw NonConvergence("majorant iteration did not converge", residuals);
}

Trajectory majorant_fixed_point(double eps, const ProblemSpec& spec, const SolverConfig& cfg) {
    cfg.validate(spec.lipschitz);
    return majorant_fixed_point(eps, VolterraSolver(spec, cfg.n_nodes), cfg);
}

StabilityReport verify_uhml(const ProblemSpec& spec, double eps, std::size_t trials, const SolverConfig& cfg,
                            std::uint64_t seed) {
    if (trials < 1) throw DomainError("trials must be >= 1");
    cfg.validate(spec.lipschitz);
    const VolterraSolver solver(spec, cfg.n_nodes);
    StabilityReport rep;
    rep.eps = eps;
    rep.trials = trials;
    rep.c_ml = uhml_constant(spec.lipschitz, spec.mu, spec.phi, spec.m, spec.n);

    // the unperturbed solution shares alpha with every trial
    const Trajectory z = solver.picard(cfg).trajectory;
    const Trajectory bstar = majorant_fixed_point(eps, solver, cfg);
    const std::size_t H = solver.history_len();
    std::vector<double> env(solver.main_nodes());
    for (std::size_t j = 0; j < env.size(); ++j) env[j] = eps * ml1(spec.mu, std::pow(solver.delta_phi(j), spec.mu));

    for (std::size_t t = 0; t < trials; ++t) {
        const Perturbation pert = admissible_perturbation(eps, spec.mu, spec.phi, spec.m, spec.n, seed + t, t == 0);
        Trajectory zt;
        try {
            zt = perturbed_solve(solver, pert, cfg);
        } catch (const NonConvergence&) {
            ++rep.failed_trials;
            rep.trial_ratios.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        std::vector<double> d(z.size());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = std::fabs(zt.values[k] - z.values[k]);
        for (std::size_t k = 0; k <= H; ++k) rep.history_max_dev = std::max(rep.history_max_dev, d[k]);
        double ratio = 0.0;
        for (std::size_t j = 0; j < env.size(); ++j) ratio = std::max(ratio, d[H + j] / env[j]);
        rep.trial_ratios.push_back(ratio);
        rep.worst_ratio = std::max(rep.worst_ratio, ratio);
        const auto sd = majorant_operator(solver, eps, d);
        for (std::size_t k = H; k < d.size(); ++k) {
            rep.domination_excess = std::max(rep.domination_excess, d[k] - sd[k]);
            rep.majorant_excess = std::max(rep.majorant_excess, d[k] - bstar.values[k]);
        }
    }
    rep.pass = rep.failed_trials == 0 && rep.history_max_dev == 0.0 &&
               rep.worst_ratio <= rep.c_ml * (1.0 + kCertificationSlack);
    return rep;
}

SampledFunction gronwall_majorant(const SampledFunction& c2, double c3, double mu, const PhiFunction& phi, double m) {
    c2.validate();
    if (!(c3 >= 0.0) || !std::isfinite(c3)) throw DomainError("c3 must be >= 0");
    if (!(mu > 0.0 && mu <= 1.0)) throw DomainError("order must lie in (0, 1]");
    if (c2.grid.front() < m) throw DomainError("majorant grid starts before m");
    for (std::size_t k = 1; k < c2.size(); ++k)
        if (c2.values[k] < c2.values[k - 1]) {
            throw DomainError("c2 decreases at node " + std::to_string(k));
        }
    const double u0 = phi(m);
    const double g = fracdelay::gamma(mu) * c3;
    SampledFunction out = c2;
    for (std::size_t k = 0; k < out.size(); ++k)
        out.values[k] = c2.values[k] * ml1(mu, g * std::pow(phi(c2.grid[k]) - u0, mu));
    return out;
}

}  // namespace fracdelay
