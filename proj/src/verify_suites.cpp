#include "fracdelay/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "fracdelay/errors.hpp"
#include "fracdelay/laplace.hpp"
#include "fracdelay/phi_calculus.hpp"
#include "fracdelay/special_functions.hpp"

namespace fracdelay {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kE = 2.718281828459045;

struct Entry {
    std::string name;
    double tol;
    std::function<double()> error;
};

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double sup_err(const SampledFunction& got, const std::function<double(double)>& ref, std::size_t from = 0) {
    double worst = 0.0;
    for (std::size_t i = from; i < got.size(); ++i) worst = std::max(worst, std::fabs(got.values[i] - ref(got.grid[i])));
    return worst;
}

std::vector<Entry> special_suite() {
    return {
        {"gamma recurrence G(x+1) = x G(x)", 1e-13,
         [] {
             double worst = 0.0;
             for (double x : {0.1, 0.5, 1.3, 2.7, 7.5, 20.25, 60.5})
                 worst = std::max(worst, std::fabs(fracdelay::gamma(x + 1.0) / (x * fracdelay::gamma(x)) - 1.0));
             return worst;
         }},
        {"gamma reflection G(x) G(1-x) = pi / sin(pi x)", 1e-13,
         [] {
             double worst = 0.0;
             for (double x : {0.1, 0.25, 0.5, 0.8})
                 worst = std::max(worst,
                                  std::fabs(fracdelay::gamma(x) * fracdelay::gamma(1.0 - x) * std::sin(kPi * x) / kPi - 1.0));
             return worst;
         }},
        // relative to the largest of the three terms, |t| <= 5 keeps them finite
        {"ML recurrence E(p,q) = t E(p,p+q) + 1/G(q), relative", 1e-9,
         [] {
             std::mt19937_64 rng(2024);
             double worst = 0.0;
             for (int k = 0; k < 50; ++k) {
                 const double p = 0.5 + 1.5 * unit(rng), q = 0.1 + 1.9 * unit(rng), t = -5.0 + 10.0 * unit(rng);
                 const double a = ml2(p, q, t), b = t * ml2(p, p + q, t), c = 1.0 / fracdelay::gamma(q);
                 worst = std::max(worst, std::fabs(a - b - c) / std::max({1.0, std::fabs(a), std::fabs(b)}));
             }
             return worst;
         }},
        {"ML erfc form E(1/2)(-x) = exp(x^2) erfc(x)", 1e-13,
         [] {
             double worst = 0.0;
             for (double x : {0.1, 0.5, 1.0, 2.0})
                 worst = std::max(worst, std::fabs(ml1(0.5, -x) - std::exp(x * x) * std::erfc(x)));
             return worst;
         }},
        {"ML bounds 0 <= E(p,q)(t) <= 1/G(q), t < 0", 1e-12,
         [] {
             std::mt19937_64 rng(77);
             double excess = 0.0;
             for (int k = 0; k < 50; ++k) {
                 const double p = 0.05 + 0.9 * unit(rng), q = p + 2.0 * unit(rng), t = -30.0 * (unit(rng) + 1e-9);
                 const double v = ml2(p, q, t);
                 excess = std::max({excess, -v, v - 1.0 / fracdelay::gamma(q)});
             }
             return std::max(0.0, excess);
         }},
    };
}

std::vector<Entry> calculus_suite() {
    return {
        {"I^mu 1 = (dPhi)^mu / G(mu+1)", 1e-6,
         [] {
             const auto z = sample(uniform_grid(0.0, 1.0, 512), [](double) { return 1.0; });
             const auto r = frac_integral(z, 0.5, PhiFunction::identity(), 0.0);
             return sup_err(r, [](double l) { return std::sqrt(l) / fracdelay::gamma(1.5); });
         }},
        {"I^mu (dPhi)^(k-1) power law", 1e-5,
         [] {
             const auto phi = PhiFunction::logarithmic();
             const auto z = sample(uniform_grid(1.0, kE, 1024), [](double l) { return std::pow(std::log(l), 0.3); });
             const auto r = frac_integral(z, 0.4, phi, 1.0, StartBehaviour::power(0.3));
             const double c = fracdelay::gamma(1.3) / fracdelay::gamma(1.7);
             return sup_err(r, [&](double l) { return c * std::pow(std::log(l), 0.7); });
         }},
        {"I^mu E_mu(b dPhi^mu) = (E_mu - 1) / b", 1e-4,
         [] {
             const double mu = 0.5, beta = 2.0;
             const auto e = [&](double l) { return ml1(mu, beta * std::pow(l, mu)); };
             const auto z = sample(uniform_grid(0.0, 1.0, 1024), e);
             const auto r = frac_integral(z, mu, PhiFunction::identity(), 0.0, StartBehaviour::power(mu));
             return sup_err(r, [&](double l) { return (e(l) - 1.0) / beta; });
         }},
        {"semigroup I^a I^b = I^(a+b)", 1e-6,
         [] {
             const auto phi = PhiFunction::exponential();
             const auto z = sample(uniform_grid(0.0, 1.0, 512), [](double l) { return std::cos(2.0 * l); });
             const auto ib = frac_integral(z, 0.4, phi, 0.0);
             const auto iab = frac_integral(ib, 0.3, phi, 0.0, StartBehaviour::power(0.4));
             const auto ref = frac_integral(z, 0.7, phi, 0.0);
             double worst = 0.0;
             for (std::size_t i = 0; i < z.size(); ++i) worst = std::max(worst, std::fabs(iab.values[i] - ref.values[i]));
             return worst;
         }},
        {"D^mu constant = 0", 1e-8,
         [] {
             const auto z = sample(uniform_grid(0.0, 1.0, 256), [](double) { return 3.5; });
             const auto d = caputo_derivative(z, 0.5, PhiFunction::identity(), 0.0);
             return sup_err(d, [](double) { return 0.0; });
         }},
        {"D^mu (dPhi)^k power law", 1e-3,
         [] {
             const auto phi = PhiFunction::logarithmic();
             const auto z = sample(uniform_grid(1.0, kE, 2048), [](double l) { return std::pow(std::log(l), 0.8); });
             const auto d = caputo_derivative(z, 0.5, phi, 1.0, StartBehaviour::power(0.8));
             const double c = fracdelay::gamma(1.8) / fracdelay::gamma(1.3);
             return sup_err(d, [&](double l) { return c * std::pow(std::log(l), 0.3); }, 2048 / 20);
         }},
        {"D^mu I^mu z = z", 5e-3,
         [] {
             const auto f = [](double l) { return std::exp(-l) * std::sin(3.0 * l) + 0.5; };
             const auto z = sample(uniform_grid(0.0, 1.0, 512), f);
             const auto iz = frac_integral(z, 0.6, PhiFunction::identity(), 0.0);
             const auto back = caputo_derivative(iz, 0.6, PhiFunction::identity(), 0.0, StartBehaviour::power(0.6));
             return sup_err(back, f, 26);
         }},
        {"I^mu D^mu z = z - z(m)", 5e-3,
         [] {
             const auto f = [](double l) { return std::exp(-l) * std::sin(3.0 * l) + 0.5; };
             const auto z = sample(uniform_grid(0.0, 1.0, 512), f);
             const auto dz = caputo_derivative(z, 0.6, PhiFunction::identity(), 0.0);
             const auto again = frac_integral(dz, 0.6, PhiFunction::identity(), 0.0, StartBehaviour::power(0.4));
             return sup_err(again, [&](double l) { return f(l) - f(0.0); });
         }},
    };
}

std::vector<Entry> laplace_suite() {
    return {
        {"L[1] = 1/lambda", 1e-8,
         [] {
             double worst = 0.0;
             for (double lambda : {1.0, 2.0, 5.0}) {
                 const auto phi = PhiFunction::logarithmic();
                 const TransformQuery q{lambda, envelope_horizon(phi, 1.0, lambda, Envelope{1.0, 0.0}, 1e-12), 1e-9};
                 worst = std::max(worst, std::fabs(glt([](double) { return 1.0; }, phi, 1.0, q).value - 1.0 / lambda));
             }
             return worst;
         }},
        {"L[(dPhi)^(k-1)] = G(k) / lambda^k", 1e-6,
         [] {
             double worst = 0.0;
             const auto phi = PhiFunction::power(2.0);
             const double m = 0.5, u0 = phi(m), k = 1.5;
             for (double lambda : {1.0, 2.0, 5.0}) {
                 const TransformQuery q{lambda, envelope_horizon(phi, m, lambda, Envelope{2.0, 0.5}, 1e-12), 1e-9};
                 const auto r = glt([&](double l) { return std::pow(phi(l) - u0, k - 1.0); }, phi, m, q);
                 worst = std::max(worst, std::fabs(r.value - fracdelay::gamma(k) / std::pow(lambda, k)));
             }
             return worst;
         }},
        {"L[E_mu(-w dPhi^mu)] = lambda^(mu-1) / (lambda^mu + w)", 1e-5,
         [] {
             double worst = 0.0;
             const auto phi = PhiFunction::identity();
             const double mu = 0.5, w = 1.0;
             for (double lambda : {1.0, 2.0, 5.0}) {
                 const TransformQuery q{lambda, envelope_horizon(phi, 0.0, lambda, Envelope{1.0, 0.0}, 1e-12), 1e-9};
                 const MlBatch e(mu, 1.0, w * std::pow(q.horizon, mu));
                 const auto r = glt([&](double l) { return e(-w * std::pow(l, mu)); }, phi, 0.0, q);
                 worst = std::max(worst, std::fabs(r.value - std::pow(lambda, mu - 1.0) / (std::pow(lambda, mu) + w)));
             }
             return worst;
         }},
        {"L[dPhi^(q-1) E_(p,q)(-w dPhi^p)] = lambda^(p-q) / (lambda^p + w)", 1e-4,
         [] {
             double worst = 0.0;
             const auto phi = PhiFunction::identity();
             const double p = 0.05, qq = 0.5;
             for (double lambda : {1.0, 2.0, 5.0}) {
                 const double horizon = envelope_horizon(phi, 0.0, lambda, Envelope{10.0, 0.0}, 1e-12);
                 const MlBatch e(p, qq, std::pow(horizon, p));
                 const auto r = glt([&](double l) { return std::pow(l, qq - 1.0) * e(-std::pow(l, p)); }, phi, 0.0,
                                    TransformQuery{lambda, horizon, 1e-7});
                 worst = std::max(worst, std::fabs(r.value - std::pow(lambda, p - qq) / (std::pow(lambda, p) + 1.0)));
             }
             return worst;
         }},
        {"convolution theorem L[f * g] = L[f] L[g]", 1e-4,
         [] {
             auto bump = [](double u) { return u > 0.0 && u < 1.0 ? std::pow(std::sin(kPi * u), 4) : 0.0; };
             auto ramp = [](double u) { return u > 0.0 && u < 2.0 ? u * std::pow(2.0 - u, 3) : 0.0; };
             double worst = 0.0;
             for (const auto& phi : {PhiFunction::identity(), PhiFunction::exponential()}) {
                 const double m = 0.0, u0 = phi(m);
                 std::vector<double> grid;
                 for (double u : uniform_grid(0.0, 3.2, 2049)) grid.push_back(phi.inverse(u0 + u));
                 grid.front() = m;
                 const auto z1 = sample(grid, [&](double l) { return bump(phi(l) - u0); });
                 const auto z2 = sample(grid, [&](double l) { return ramp(phi(l) - u0); });
                 const auto c = phi_convolve(z1, z2, phi, m);
                 for (double lambda : {1.0, 2.0, 5.0})
                     worst = std::max(worst, std::fabs(glt(c, phi, m, lambda) -
                                                       glt(z1, phi, m, lambda) * glt(z2, phi, m, lambda)));
             }
             return worst;
         }},
        {"L[I^mu f] = L[f] / lambda^mu", 1e-4,
         [] {
             const auto phi = PhiFunction::identity();
             const auto z = sample(uniform_grid(0.0, 60.0, 6001), [](double l) { return std::exp(-l) * (1.0 + l); });
             double worst = 0.0;
             for (double mu : {0.3, 0.7}) {
                 const auto iz = frac_integral(z, mu, phi, 0.0);
                 for (double lambda : {1.0, 2.0, 5.0})
                     worst = std::max(worst, std::fabs(glt(iz, phi, 0.0, lambda, StartBehaviour::power(mu)) -
                                                       glt(z, phi, 0.0, lambda) / std::pow(lambda, mu)));
             }
             return worst;
         }},
        {"L[D^mu f] = lambda^mu L[f] - lambda^(mu-1) f(m)", 5e-3,
         [] {
             const auto phi = PhiFunction::identity();
             const auto f = [](double l) { return std::exp(-l) * (1.0 + l) + 0.25 * std::exp(-2.0 * l); };
             const auto z = sample(uniform_grid(0.0, 60.0, 6001), f);
             const double mu = 0.5;
             const auto dz = caputo_derivative(z, mu, phi, 0.0);
             double worst = 0.0;
             for (double lambda : {1.0, 2.0, 5.0}) {
                 const double lhs = glt(dz, phi, 0.0, lambda, StartBehaviour::power(1.0 - mu));
                 const double rhs = std::pow(lambda, mu) * glt(z, phi, 0.0, lambda) - std::pow(lambda, mu - 1.0) * f(0.0);
                 worst = std::max(worst, std::fabs(lhs - rhs));
             }
             return worst;
         }},
    };
}

void run(const std::string& suite, const std::vector<Entry>& entries, std::vector<IdentityCheck>& out) {
    for (const auto& e : entries) {
        IdentityCheck c{suite, e.name, std::numeric_limits<double>::infinity(), e.tol, false};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.error = e.error();
        } catch (const std::exception&) {
            c.error = std::numeric_limits<double>::infinity();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.pass = c.error <= c.tol;
        out.push_back(std::move(c));
    }
}

}  // namespace

std::vector<IdentityCheck> run_verify_suite(const std::string& suite) {
    std::vector<IdentityCheck> out;
    const bool all = suite == "all";
    if (!all && suite != "special" && suite != "calculus" && suite != "laplace")
        throw DomainError("unknown verify suite '" + suite + "' (expected laplace, calculus, special or all)");
    if (all || suite == "special") run("special", special_suite(), out);
    if (all || suite == "calculus") run("calculus", calculus_suite(), out);
    if (all || suite == "laplace") run("laplace", laplace_suite(), out);
    return out;
}

std::string format_checks(const std::vector<IdentityCheck>& checks) {
    std::ostringstream os;
    std::size_t width = 8;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    char buf[64];
    os << "suite     " << "identity" << std::string(width - 8, ' ') << "  error      tol        time     result\n";
    std::size_t failed = 0;
    for (const auto& c : checks) {
        os << c.suite << std::string(10 - std::min<std::size_t>(9, c.suite.size()), ' ') << c.name
           << std::string(width - c.name.size(), ' ') << "  ";
        std::snprintf(buf, sizeof buf, "%-9.2e  %-9.2e  %6.2fs  ", c.error, c.tol, c.seconds);
        os << buf << (c.pass ? "PASS" : "FAIL") << '\n';
        if (!c.pass) ++failed;
    }
    os << checks.size() - failed << " of " << checks.size() << " identities hold";
    if (failed) {
        os << "; failed:";
        for (const auto& c : checks)
            if (!c.pass) os << " [" << c.name << "]";
    }
    os << '\n';
    return os.str();
}

}  // namespace fracdelay
