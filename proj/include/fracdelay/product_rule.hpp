#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <vector>

namespace fracdelay {

// Behaviour of sampled data near the anchor u0: z(u) - polynomial is a
// combination of (u - u0)^(k g + j) for the declared exponents g. Without a
// declaration the data are treated as smooth.
struct StartBehaviour {
    std::vector<double> exponents;

    static StartBehaviour smooth() { return {}; }
    static StartBehaviour power(double g) { return StartBehaviour{{g}}; }
};

// Non-integer exponents kg + j below 4, ascending, at most max_count of them.
std::vector<double> start_exponents(const StartBehaviour& start, std::size_t max_count = 6);

namespace detail {

// Lagrange basis on nodes tau[0..n): coef[j][k] is the t^k coefficient of L_j.
void lagrange_poly(const double* tau, int n, double coef[4][4]);

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
const GaussRule& gauss_rule(int n);

// m[k] = int_{ua}^{ub} (U - u)^(mu-1) ((u - ua)/(ub - ua))^k du, k <= deg, U >= ub.
void abel_cell_moments(double U, double ua, double ub, double mu, int deg, double m[4]);

// First-derivative weights at x0 for nodes x[0..n) (Fornberg).
void fd_weights(double x0, const double* x, int n, double* w);

// Stencil of the causal cubic rule for cell c in row i: first node and degree.
inline void cubic_stencil(std::size_t i, std::size_t c, std::size_t& j0, int& deg) {
    if (i == 1) {
        j0 = 0;
        deg = 1;
    } else if (i == 2) {
        j0 = 0;
        deg = 2;
    } else {
        j0 = c == 0 ? 0 : (c - 1 > i - 3 ? i - 3 : c - 1);
        deg = 3;
    }
}

bool nearly_uniform(const std::vector<double>& u);

}  // namespace detail

// Node weights of the Riemann-Liouville integral of order mu in the
// variable u (weight (U - u)^(mu-1)/Gamma(mu)) on the grid u_0 < ... < u_N,
// for every row U = u_i. Piecewise-cubic product integration with exact
// singular moments plus starting corrections for the declared behaviour.
class AbelOperator {
public:
    AbelOperator(std::vector<double> u, double mu, const StartBehaviour& start = {});

    std::size_t size() const noexcept { return u_.size(); }
    double order() const noexcept { return mu_; }
    const std::vector<double>& nodes() const noexcept { return u_; }

    std::vector<double> apply(const std::vector<double>& z) const;
    void apply(const double* z, double* out) const;

    // Row i, j <= i, of the interpolatory part (includes 1/Gamma(mu)).
    const double* row(std::size_t i) const { return w_.data() + i * (i + 1) / 2; }
    const Eigen::MatrixXd& corrections() const noexcept { return corr_; }

private:
    std::vector<double> u_;
    double mu_;
    std::vector<double> w_;
    Eigen::MatrixXd corr_;
};

}  // namespace fracdelay
