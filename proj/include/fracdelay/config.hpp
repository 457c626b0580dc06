#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracdelay/errors.hpp"
#include "fracdelay/solver.hpp"

namespace fracdelay {

// Config problem tied to one key, e.g. "problem.kappa".
class ConfigError : public DomainError {
public:
    ConfigError(std::string field, const std::string& what)
        : DomainError(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// name or name(a,b,...) from a fixed registry.
struct Selector {
    std::string name;
    std::vector<double> args;

    bool operator==(const Selector&) const = default;
};

struct StabilityBlock {
    double epsilon = 1e-2;
    std::size_t trials = 20;
    std::uint64_t seed = 42;

    bool operator==(const StabilityBlock&) const = default;
};

// Flat "section.key = value" file. Defaults reproduce the worked example.
//
//   problem.phi    identity | logarithmic | power(r) | exponential
//   problem.q      zero | constant(c) | linear(a,b) | paper_example
//   problem.delay  constant_lag | proportional(q)      f = l - sigma | q l
//   problem.alpha  constant(c) | polynomial(c0,c1,...) in l
struct RunConfig {
    double mu = 0.5;
    double kappa = 0.45;
    double rho = 1.0;
    double sigma = 0.5;
    double m = 1.0;
    double n = 2.0;
    Selector phi{"identity", {}};
    Selector q{"paper_example", {}};
    std::optional<double> lipschitz;  // registry bound when absent
    Selector delay{"constant_lag", {}};
    Selector alpha{"constant", {1.0}};

    SolverConfig solver;
    std::optional<StabilityBlock> stability;

    // Declared L_Q, or the registry bound of q.
    double resolved_lipschitz() const;

    // Builds and validates the problem, then tries to refute the declared
    // L_Q on seeded sample pairs. ConfigError names the offending field.
    ProblemSpec to_problem() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Canonical form: every set key in a fixed order, shortest round-trip numbers.
std::string serialize_config(const RunConfig& cfg);

std::string format_selector(const Selector& s);
Selector parse_selector(const std::string& field, const std::string& text);

// Largest |Q(l,u1,v1) - Q(l,u2,v2)| / (|u1-u2| + |v1-v2|) seen over seeded
// pairs with l in [m, n] and u, v in [-radius, radius].
struct LipschitzProbe {
    double ratio = 0.0;
    double ell = 0.0, u = 0.0, v = 0.0;
};
LipschitzProbe probe_lipschitz(const RightHandSide& Q, double m, double n, double radius, std::size_t samples,
                               std::uint64_t seed);

// Shortest decimal that reads back to the same double, "." separator.
std::string format_double(double x);

}  // namespace fracdelay
