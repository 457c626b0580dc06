#include "fracdelay/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace fracdelay {

namespace {

constexpr std::size_t kProbeSamples = 4096;
constexpr std::uint64_t kProbeSeed = 0x5eedf00dULL;
constexpr double kProbeSlack = 1e-9;

// Fixed key order of the canonical form.
const std::vector<std::string> kKeys = {
    "problem.mu",        "problem.kappa",   "problem.rho",     "problem.sigma",   "problem.m",
    "problem.n",         "problem.phi",     "problem.q",       "problem.lipschitz", "problem.delay",
    "problem.alpha",     "solver.n_nodes",  "solver.tol",      "solver.max_iter", "solver.beta",
    "stability.epsilon", "stability.trials", "stability.seed",
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& field, const std::string& text) {
    const std::string t = trim(text);
    double v = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (!t.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (t.empty() || ec != std::errc() || ptr != last) throw ConfigError(field, "not a number: '" + t + "'");
    if (!std::isfinite(v)) throw ConfigError(field, "must be finite");
    return v;
}

std::uint64_t to_unsigned(const std::string& field, const std::string& text) {
    const std::string t = trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
        throw ConfigError(field, "not a non-negative integer: '" + t + "'");
    return v;
}

std::string format_unsigned(std::uint64_t v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

void expect_args(const std::string& field, const Selector& s, std::size_t lo, std::size_t hi) {
    if (s.args.size() < lo || s.args.size() > hi) {
        std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
        throw ConfigError(field, s.name + " takes " + want + " argument(s), got " + std::to_string(s.args.size()));
    }
}

[[noreturn]] void unknown_selector(const std::string& field, const Selector& s, const std::string& choices) {
    throw ConfigError(field, "unknown selector '" + s.name + "', expected one of " + choices);
}

PhiFunction build_phi(const Selector& s) {
    const std::string f = "problem.phi";
    if (s.name == "identity" || s.name == "logarithmic" || s.name == "exponential") {
        expect_args(f, s, 0, 0);
        if (s.name == "identity") return PhiFunction::identity();
        return s.name == "logarithmic" ? PhiFunction::logarithmic() : PhiFunction::exponential();
    }
    if (s.name == "power") {
        expect_args(f, s, 1, 1);
        if (!(s.args[0] > 0.0)) throw ConfigError(f, "power exponent must be > 0");
        return PhiFunction::power(s.args[0]);
    }
    unknown_selector(f, s, "identity, logarithmic, power(r), exponential");
}

RightHandSide build_q(const Selector& s) {
    const std::string f = "problem.q";
    if (s.name == "zero") {
        expect_args(f, s, 0, 0);
        return [](double, double, double) { return 0.0; };
    }
    if (s.name == "constant") {
        expect_args(f, s, 1, 1);
        return [c = s.args[0]](double, double, double) { return c; };
    }
    if (s.name == "linear") {
        expect_args(f, s, 2, 2);
        return [a = s.args[0], b = s.args[1]](double, double u, double v) { return a * u + b * v; };
    }
    if (s.name == "paper_example") {
        expect_args(f, s, 0, 0);
        return reference_rhs;
    }
    unknown_selector(f, s, "zero, constant(c), linear(a,b), paper_example");
}

// Smallest valid bound, 1 where the true bound is 0 since L_Q must be > 0.
double registry_lipschitz(const Selector& s) {
    if (s.name == "linear" && s.args.size() == 2) {
        const double l = std::max(std::fabs(s.args[0]), std::fabs(s.args[1]));
        return l > 0.0 ? l : 1.0;
    }
    return 1.0;
}

ScalarFn build_delay(const Selector& s, double sigma) {
    const std::string f = "problem.delay";
    if (s.name == "constant_lag") {
        expect_args(f, s, 0, 0);
        return [sigma](double ell) { return ell - sigma; };
    }
    if (s.name == "proportional") {
        expect_args(f, s, 1, 1);
        if (!(s.args[0] > 0.0 && s.args[0] < 1.0)) throw ConfigError(f, "proportional factor must lie in (0, 1)");
        return [q = s.args[0]](double ell) { return q * ell; };
    }
    unknown_selector(f, s, "constant_lag, proportional(q)");
}

ScalarFn build_alpha(const Selector& s) {
    const std::string f = "problem.alpha";
    if (s.name == "constant") {
        expect_args(f, s, 1, 1);
        return [c = s.args[0]](double) { return c; };
    }
    if (s.name == "polynomial") {
        expect_args(f, s, 1, 64);
        return [c = s.args](double ell) {
            double v = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * ell + *it;
            return v;
        };
    }
    unknown_selector(f, s, "constant(c), polynomial(c0,c1,...)");
}

void set_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    auto stab = [&]() -> StabilityBlock& {
        if (!cfg.stability) cfg.stability.emplace();
        return *cfg.stability;
    };
    if (key == "problem.mu") cfg.mu = to_double(key, value);
    else if (key == "problem.kappa") cfg.kappa = to_double(key, value);
    else if (key == "problem.rho") cfg.rho = to_double(key, value);
    else if (key == "problem.sigma") cfg.sigma = to_double(key, value);
    else if (key == "problem.m") cfg.m = to_double(key, value);
    else if (key == "problem.n") cfg.n = to_double(key, value);
    else if (key == "problem.phi") cfg.phi = parse_selector(key, value);
    else if (key == "problem.q") cfg.q = parse_selector(key, value);
    else if (key == "problem.lipschitz") cfg.lipschitz = to_double(key, value);
    else if (key == "problem.delay") cfg.delay = parse_selector(key, value);
    else if (key == "problem.alpha") cfg.alpha = parse_selector(key, value);
    else if (key == "solver.n_nodes") cfg.solver.n_nodes = to_unsigned(key, value);
    else if (key == "solver.tol") cfg.solver.tol = to_double(key, value);
    else if (key == "solver.max_iter") cfg.solver.max_iter = to_unsigned(key, value);
    else if (key == "solver.beta") cfg.solver.beta = to_double(key, value);
    else if (key == "stability.epsilon") stab().epsilon = to_double(key, value);
    else if (key == "stability.trials") stab().trials = to_unsigned(key, value);
    else if (key == "stability.seed") stab().seed = to_unsigned(key, value);
    else throw ConfigError(key, "unknown key");
}

void check_scalars(const RunConfig& c) {
    if (!(c.mu > 0.0 && c.mu <= 1.0)) throw ConfigError("problem.mu", "orders must satisfy 0 < kappa < mu <= 1");
    if (!(c.kappa > 0.0 && c.kappa < c.mu))
        throw ConfigError("problem.kappa", "orders must satisfy 0 < kappa < mu <= 1");
    if (!(c.rho > 0.0)) throw ConfigError("problem.rho", "must be > 0");
    if (!(c.sigma > 0.0)) throw ConfigError("problem.sigma", "must be > 0");
    if (!(c.m > 0.0)) throw ConfigError("problem.m", "interval must satisfy 0 < m < n");
    if (!(c.n > c.m)) throw ConfigError("problem.n", "interval must satisfy 0 < m < n");
    if (c.lipschitz && !(*c.lipschitz > 0.0)) throw ConfigError("problem.lipschitz", "must be > 0");
    const double l = c.resolved_lipschitz();
    if (c.solver.n_nodes < 16) throw ConfigError("solver.n_nodes", "must be >= 16");
    if (!(c.solver.tol > 0.0)) throw ConfigError("solver.tol", "must be > 0");
    if (c.solver.max_iter < 1) throw ConfigError("solver.max_iter", "must be >= 1");
    if (!contraction_certificate(l, c.solver.resolved_beta(l)))
        throw ConfigError("solver.beta", "must exceed 2 L_Q for the contraction certificate");
    if (c.stability) {
        if (!(c.stability->epsilon > 0.0)) throw ConfigError("stability.epsilon", "must be > 0");
        if (c.stability->trials < 1) throw ConfigError("stability.trials", "must be >= 1");
    }
}

double history_scale(const ScalarFn& alpha, double lo, double hi) {
    double s = 0.0;
    for (int k = 0; k <= 64; ++k) s = std::max(s, std::fabs(alpha(lo + (hi - lo) * k / 64.0)));
    return s;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

std::string format_selector(const Selector& s) {
    if (s.args.empty()) return s.name;
    std::string out = s.name + "(";
    for (std::size_t k = 0; k < s.args.size(); ++k) {
        if (k) out += ",";
        out += format_double(s.args[k]);
    }
    return out + ")";
}

Selector parse_selector(const std::string& field, const std::string& text) {
    const std::string t = trim(text);
    Selector s;
    const auto open = t.find('(');
    s.name = trim(t.substr(0, open));
    const bool ident = !s.name.empty() && std::all_of(s.name.begin(), s.name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
    if (!ident) throw ConfigError(field, "malformed selector '" + t + "'");
    if (open == std::string::npos) return s;
    if (t.back() != ')') throw ConfigError(field, "missing ')' in '" + t + "'");
    const std::string inner = t.substr(open + 1, t.size() - open - 2);
    if (trim(inner).empty()) return s;
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) s.args.push_back(to_double(field, item));
    if (inner.back() == ',') throw ConfigError(field, "trailing ',' in '" + t + "'");
    return s;
}

double RunConfig::resolved_lipschitz() const { return lipschitz ? *lipschitz : registry_lipschitz(q); }

ProblemSpec RunConfig::to_problem() const {
    check_scalars(*this);
    ProblemSpec s;
    s.mu = mu;
    s.kappa = kappa;
    s.rho = rho;
    s.sigma = sigma;
    s.m = m;
    s.n = n;
    s.phi = build_phi(phi);
    s.Q = build_q(q);
    s.lipschitz = resolved_lipschitz();
    s.delay = build_delay(delay, sigma);
    s.alpha = build_alpha(alpha);
    try {
        s.validate();
    } catch (const DomainError& e) {
        const std::string what = e.what();
        std::string field = "problem";
        if (what.find("delay") != std::string::npos) field = "problem.delay";
        else if (what.find("alpha") != std::string::npos) field = "problem.alpha";
        else if (what.find("Phi") != std::string::npos) field = "problem.phi";
        throw ConfigError(field, what);
    }

    // the state range the iterates visit is unknown up front; probe well beyond the history
    const double radius = 10.0 * (1.0 + history_scale(s.alpha, m - sigma, m));
    const auto probe = probe_lipschitz(s.Q, m, n, radius, kProbeSamples, kProbeSeed);
    if (probe.ratio > s.lipschitz * (1.0 + kProbeSlack)) {
        throw ConfigError("problem.lipschitz",
                          "declared L_Q = " + format_double(s.lipschitz) + " refuted by q = " + format_selector(q) +
                              ": |dQ| / (|du| + |dv|) = " + format_double(probe.ratio) + " near l = " +
                              format_double(probe.ell) + ", u = " + format_double(probe.u) +
                              ", v = " + format_double(probe.v));
    }
    return s;
}

LipschitzProbe probe_lipschitz(const RightHandSide& Q, double m, double n, double radius, std::size_t samples,
                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    LipschitzProbe best;
    for (std::size_t k = 0; k < samples; ++k) {
        const double ell = m + (n - m) * unit(rng);
        const double u1 = radius * (2.0 * unit(rng) - 1.0);
        const double v1 = radius * (2.0 * unit(rng) - 1.0);
        // alternate far pairs with nearby ones that see the local slope
        const double h = (k & 1) ? 1e-4 * (1.0 + radius) : 2.0 * radius;
        const double u2 = u1 + h * (2.0 * unit(rng) - 1.0);
        const double v2 = v1 + h * (2.0 * unit(rng) - 1.0);
        const double den = std::fabs(u1 - u2) + std::fabs(v1 - v2);
        if (!(den > 0.0)) continue;
        const double r = std::fabs(Q(ell, u1, v1) - Q(ell, u2, v2)) / den;
        if (r > best.ratio) best = {r, ell, u1, v1};
    }
    return best;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno), "expected 'section.key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) throw ConfigError(key, "unknown key");
        if (!seen.insert(key).second) throw ConfigError(key, "duplicate key");
        if (value.empty()) throw ConfigError(key, "missing value");
        set_key(cfg, key, value);
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("config", "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
    std::map<std::string, std::string> v;
    v["problem.mu"] = format_double(c.mu);
    v["problem.kappa"] = format_double(c.kappa);
    v["problem.rho"] = format_double(c.rho);
    v["problem.sigma"] = format_double(c.sigma);
    v["problem.m"] = format_double(c.m);
    v["problem.n"] = format_double(c.n);
    v["problem.phi"] = format_selector(c.phi);
    v["problem.q"] = format_selector(c.q);
    if (c.lipschitz) v["problem.lipschitz"] = format_double(*c.lipschitz);
    v["problem.delay"] = format_selector(c.delay);
    v["problem.alpha"] = format_selector(c.alpha);
    v["solver.n_nodes"] = format_unsigned(c.solver.n_nodes);
    v["solver.tol"] = format_double(c.solver.tol);
    v["solver.max_iter"] = format_unsigned(c.solver.max_iter);
    if (c.solver.beta) v["solver.beta"] = format_double(*c.solver.beta);
    if (c.stability) {
        v["stability.epsilon"] = format_double(c.stability->epsilon);
        v["stability.trials"] = format_unsigned(c.stability->trials);
        v["stability.seed"] = format_unsigned(c.stability->seed);
    }
    std::string out;
    for (const auto& k : kKeys) {
        const auto it = v.find(k);
        if (it != v.end()) out += k + " = " + it->second + "\n";
    }
    return out;
}

}  // namespace fracdelay
