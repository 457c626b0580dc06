#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fracdelay/special_functions.hpp"
#include "fracdelay/stability.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace fracdelay;

namespace {

const SolverConfig kCfg{512, 1e-10, 200, 3.0};

double envelope(const ProblemSpec& s, double eps, double ell) {
    return eps * ml1(s.mu, std::pow(s.phi(ell) - s.phi(s.m), s.mu));
}

}  // namespace

TEST_CASE("stability constant") {
    const auto id = PhiFunction::identity();
    CHECK(std::fabs(uhml_constant(1e-14, 0.5, id, 1.0, 2.0) - 1.0) <= 1e-12);
    CHECK(std::fabs(uhml_constant(1.0, 1.0, id, 0.0, 1.0) - std::exp(2.0)) <= 1e-12);
    const double c = uhml_constant(1.0, 0.5, id, 1.0, 2.0);
    CHECK(std::fabs(c - oracle::ml1_half_2) <= 1e-10 * c);
    CHECK(std::fabs(c - 108.94090438997797) <= 1e-10 * c);
    CHECK(uhml_constant(0.3, 0.7, PhiFunction::logarithmic(), 1.0, 5.0) > 1.0);
    CHECK_THROWS_AS(uhml_constant(0.0, 0.5, id, 1.0, 2.0), DomainError);
    CHECK_THROWS_AS(uhml_constant(1.0, 0.5, id, 2.0, 1.0), DomainError);
}

TEST_CASE("admissible perturbations") {
    const ProblemSpec s = reference_problem();
    CHECK_THROWS_AS(admissible_perturbation(0.0, s.mu, s.phi, s.m, s.n, 1), DomainError);
    const auto tiny = admissible_perturbation(1e-9, s.mu, s.phi, s.m, s.n, 7);
    for (double l : testutil::linspace(s.m, s.n, 50)) CHECK(std::fabs(tiny(l)) <= 1e-8);

    const auto sat = admissible_perturbation(1e-2, s.mu, s.phi, s.m, s.n, 0, true);
    for (double l : testutil::linspace(s.m, s.n, 50)) CHECK(sat(l) == envelope(s, 1e-2, l));

    for (std::uint64_t seed : {1u, 42u, 99u, 12345u}) {
        const auto p = admissible_perturbation(1e-3, s.mu, s.phi, s.m, s.n, seed);
        CHECK(p.amp.size() >= 1);
        CHECK(p.amp.size() <= 5);
        bool within = true;
        for (double l : testutil::linspace(s.m, s.n, 400)) within = within && std::fabs(p(l)) <= envelope(s, 1e-3, l);
        CHECK(within);
    }
    const auto a = admissible_perturbation(1e-2, s.mu, s.phi, s.m, s.n, 42);
    const auto b = admissible_perturbation(1e-2, s.mu, s.phi, s.m, s.n, 42);
    const auto c = admissible_perturbation(1e-2, s.mu, s.phi, s.m, s.n, 43);
    bool same = true, differs = false;
    for (double l : testutil::linspace(s.m, s.n, 101)) {
        same = same && a(l) == b(l);
        differs = differs || a(l) != c(l);
    }
    CHECK(same);
    CHECK(differs);
}

TEST_CASE("perturbed solve") {
    const ProblemSpec s = reference_problem();
    SUBCASE("null perturbation is bitwise the unperturbed solve") {
        Perturbation zero = admissible_perturbation(1e-3, s.mu, s.phi, s.m, s.n, 1);
        zero.theta = [](double) { return 0.0; };
        const auto zt = perturbed_solve(s, zero, kCfg);
        const auto z = picard_solve(s, kCfg).trajectory;
        CHECK(zt.values == z.values);
        CHECK(zt.grid == z.grid);
    }
    SUBCASE("superposition for state-independent right-hand side") {
        ProblemSpec si = s;
        si.Q = [](double l, double, double) { return std::cos(2.0 * l); };
        const auto p = admissible_perturbation(1e-2, si.mu, si.phi, si.m, si.n, 5);
        const VolterraSolver solver(si, 512);
        const auto zt = perturbed_solve(solver, p, kCfg);
        const auto z = solver.picard(kCfg).trajectory;
        const auto lin = solver.linear_solution(sample_perturbation(solver, p), 1.0);
        double worst = 0.0;
        for (std::size_t k = 0; k < z.size(); ++k)
            worst = std::max(worst, std::fabs((zt.values[k] - z.values[k]) - (lin.values[k] - 1.0)));
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("integral inequality") {
    const ProblemSpec s = reference_problem();
    const VolterraSolver solver(s, 512);
    SUBCASE("null perturbation") {
        const auto z = solver.picard(kCfg).trajectory;
        const auto p = admissible_perturbation(1e-3, s.mu, s.phi, s.m, s.n, 3);
        const auto r = verify_lhus(z, s, p);
        CHECK(r.pass);
        // Picard stops on the weighted residual, so the sup bound carries the largest weight
        const auto w = solver.bielecki_weights(3.0);
        for (std::size_t j = 0; j < r.residual.size(); ++j)
            CHECK(r.residual[j] <= 2.0 * kCfg.tol * w[solver.history_len() + j]);
    }
    SUBCASE("saturating perturbation") {
        const double eps = 1e-2;
        const auto p = admissible_perturbation(eps, s.mu, s.phi, s.m, s.n, 0, true);
        const auto z = perturbed_solve(solver, p, kCfg);
        const auto r = verify_lhus(z, s, p);
        CHECK(r.pass);
        // residual at n is the kernel integral of the envelope
        const double ref = eps * oracle::envelope_integral;
        CHECK(std::fabs(r.residual.back() - ref) <= 1e-3 * ref);
        CHECK(r.residual.back() <= envelope(s, eps, s.n));
    }
    SUBCASE("seeded perturbation keeps a strict margin") {
        const auto p = admissible_perturbation(1e-2, s.mu, s.phi, s.m, s.n, 42);
        const auto z = perturbed_solve(solver, p, kCfg);
        const auto r = verify_lhus(z, s, p);
        CHECK(r.pass);
        CHECK(r.max_violation < 0.0);
    }
    SUBCASE("a mislabelled amplitude is detected") {
        const auto p = admissible_perturbation(1e-2, s.mu, s.phi, s.m, s.n, 0, true);
        const auto z = perturbed_solve(solver, p, kCfg);
        auto claimed = p;
        claimed.eps = 1e-4;
        CHECK_FALSE(verify_lhus(z, s, claimed).pass);
    }
}

TEST_CASE("Gronwall majorant") {
    const ProblemSpec s = reference_problem();
    const auto grid = uniform_grid(s.m, s.n, 200);
    const auto c2 = sample(grid, [&](double l) { return envelope(s, 1e-2, l); });
    const auto same = gronwall_majorant(c2, 0.0, s.mu, s.phi, s.m);
    CHECK(same.values == c2.values);

    const auto g = gronwall_majorant(c2, 2.0 / fracdelay::gamma(s.mu), s.mu, s.phi, s.m);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double ref = 1e-2 * ml1(s.mu, 2.0 * std::pow(grid[k] - s.m, s.mu)) * ml1(s.mu, std::pow(grid[k] - s.m, s.mu));
        CHECK(std::fabs(g.values[k] - ref) <= 1e-12 * ref);
    }

    const auto ones = sample(uniform_grid(0.0, 2.0, 50), [](double) { return 1.5; });
    const auto e = gronwall_majorant(ones, 0.7, 1.0, PhiFunction::identity(), 0.0);
    for (std::size_t k = 0; k < e.size(); ++k) CHECK(std::fabs(e.values[k] - 1.5 * std::exp(0.7 * e.grid[k])) <= 1e-12 * e.values[k]);

    auto down = c2;
    down.values[100] = 0.0;
    CHECK_THROWS_AS(gronwall_majorant(down, 1.0, s.mu, s.phi, s.m), DomainError);
    CHECK_THROWS_AS(gronwall_majorant(c2, -1.0, s.mu, s.phi, s.m), DomainError);
}

TEST_CASE("majorant fixed point") {
    const ProblemSpec s = reference_problem();
    const VolterraSolver solver(s, 512);
    const double eps = 1e-2;
    const auto b = majorant_fixed_point(eps, solver, kCfg);
    const std::size_t H = b.history_len;
    for (std::size_t k = 0; k < H; ++k) CHECK(b.values[k] == 0.0);

    bool increasing = true;
    for (std::size_t k = H + 1; k < b.size(); ++k) increasing = increasing && b.values[k] >= b.values[k - 1];
    CHECK(increasing);

    // fixed point of S
    const auto sb = majorant_operator(solver, eps, b.values);
    const auto w = solver.bielecki_weights(3.0);
    double fp = 0.0, nb = 0.0;
    for (std::size_t k = 0; k < b.size(); ++k) {
        fp = std::max(fp, std::fabs(sb[k] - b.values[k]) / w[k]);
        nb = std::max(nb, b.values[k] / w[k]);
    }
    CHECK(fp <= 2.0 * kCfg.tol * nb);

    // chain b* <= Gronwall <= c eps E
    const double c = uhml_constant(s.lipschitz, s.mu, s.phi, s.m, s.n);
    SampledFunction c2{std::vector<double>(b.grid.begin() + static_cast<long>(H), b.grid.end()), {}};
    for (double l : c2.grid) c2.values.push_back(envelope(s, eps, l));
    const auto gm = gronwall_majorant(c2, 2.0 * s.lipschitz / fracdelay::gamma(s.mu), s.mu, s.phi, s.m);
    for (std::size_t j = 0; j < c2.size(); ++j) {
        CHECK(b.values[H + j] <= gm.values[j] * (1.0 + 1e-9));
        CHECK(gm.values[j] <= c * c2.values[j] * (1.0 + 1e-12));
    }

    // linear in eps
    const auto b2 = majorant_fixed_point(2.0 * eps, solver, kCfg);
    double lin = 0.0;
    for (std::size_t k = H; k < b.size(); ++k) lin = std::max(lin, std::fabs(b2.values[k] - 2.0 * b.values[k]) / b2.values[k]);
    CHECK(lin <= 1e-12);

    const auto tiny = majorant_fixed_point(1e-12, solver, kCfg);
    for (double v : tiny.values) CHECK(v <= 1e-9);
}

TEST_CASE("majorant operator is monotone") {
    const ProblemSpec s = reference_problem();
    const VolterraSolver solver(s, 256);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> lo(solver.grid().size()), hi(lo.size());
        for (std::size_t k = 0; k < lo.size(); ++k) {
            lo[k] = testutil::unit(rng);
            hi[k] = lo[k] + testutil::unit(rng);
        }
        const auto a = majorant_operator(solver, 1e-3, lo);
        const auto b = majorant_operator(solver, 1e-3, hi);
        bool ok = true;
        for (std::size_t k = 0; k < a.size(); ++k) ok = ok && a[k] <= b[k];
        CHECK(ok);
    }
}

TEST_CASE("stability verification") {
    const ProblemSpec s = reference_problem();
    SUBCASE("tiny amplitude") {
        const auto r = verify_uhml(s, 1e-9, 1, kCfg);
        CHECK(r.pass);
        CHECK(r.worst_ratio < 0.01 * r.c_ml);
    }
    SUBCASE("state-independent right-hand side, saturating direction") {
        ProblemSpec si = s;
        si.Q = [](double l, double, double) { return l; };
        const auto r = verify_uhml(si, 1e-2, 1, kCfg);
        const VolterraSolver solver(si, kCfg.n_nodes);
        const auto p = admissible_perturbation(1e-2, si.mu, si.phi, si.m, si.n, 0, true);
        const auto lin = solver.linear_solution(sample_perturbation(solver, p), 0.0);
        double ratio = 0.0;
        for (std::size_t j = 1; j < solver.main_nodes(); ++j) {
            const std::size_t k = solver.history_len() + j;
            ratio = std::max(ratio, std::fabs(lin.values[k]) / envelope(si, 1e-2, solver.grid()[k]));
        }
        CHECK(std::fabs(r.worst_ratio - ratio) <= 1e-8 * ratio);
        CHECK(r.worst_ratio <= r.c_ml);
        CHECK(r.pass);
    }
    SUBCASE("reference problem") {
        for (double eps : {1e-3, 1e-2}) {
            const auto r = verify_uhml(s, eps, 20, kCfg);
            CHECK(r.pass);
            CHECK(r.failed_trials == 0);
            CHECK(r.history_max_dev == 0.0);
            CHECK(r.worst_ratio <= r.c_ml);
            CHECK(r.domination_excess <= 1e-9 * eps);
            CHECK(r.majorant_excess <= 1e-9 * eps);
            CHECK(r.trial_ratios.size() == 20);
            MESSAGE("eps " << eps << ": worst ratio " << r.worst_ratio << " against c = " << r.c_ml);
        }
    }
    CHECK_THROWS_AS(verify_uhml(s, 1e-2, 0, kCfg), DomainError);
}
