#include "fracdelay/phi_calculus.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "fracdelay/errors.hpp"

namespace fracdelay {

namespace {

// nodes near m differentiated with the power basis
constexpr std::size_t kStartNodes = 12;

std::vector<double> anchored_u(const SampledFunction& z, const PhiFunction& phi, double m) {
    z.validate();
    if (z.grid.front() != m) throw DomainError("grid is not anchored at the lower terminal m");
    std::vector<double> u = phi.transform(z.grid);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!std::isfinite(u[i])) throw DomainError("Phi is not finite on the grid");
        if (i > 0 && !(u[i] > u[i - 1])) throw DomainError("Phi is not strictly increasing on the grid");
    }
    return u;
}

}  // namespace

SampledFunction frac_integral(const SampledFunction& z, double mu, const PhiFunction& phi, double m,
                              const StartBehaviour& start) {
    if (!(mu > 0.0 && mu <= 1.0)) throw DomainError("integral order must lie in (0, 1]");
    AbelOperator op(anchored_u(z, phi, m), mu, start);
    return SampledFunction{z.grid, op.apply(z.values)};
}

std::vector<double> phi_derivative(const std::vector<double>& u, const std::vector<double>& values,
                                   const std::vector<double>& exponents) {
    const std::size_t n = u.size();
    if (n < 2 || values.size() != n) throw DomainError("derivative needs matching samples");
    const int width = static_cast<int>(std::min<std::size_t>(5, n));
    // basis 1, x^e1, ..., x^e4 near the start
    std::vector<double> basis = {0.0};
    for (double e : exponents) {
        if (static_cast<int>(basis.size()) == width) break;
        if (e > basis.back()) basis.push_back(e);
    }
    const bool special = static_cast<int>(basis.size()) == width && exponents.size() > 0;
    const std::size_t n_start = special ? std::min<std::size_t>(n, kStartNodes) : 0;

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t s = i >= 2 ? i - 2 : 0;
        if (s + width > n) s = n - width;
        double w[5];
        if (i < n_start) {
            const double scale = u[s + width - 1] - u[0];
            Eigen::MatrixXd A(width, width);
            Eigen::VectorXd rhs(width);
            const double xi = (u[i] - u[0]) / scale;
            for (int b = 0; b < width; ++b) {
                const double e = basis[b];
                for (int k = 0; k < width; ++k) A(b, k) = e == 0.0 ? 1.0 : std::pow((u[s + k] - u[0]) / scale, e);
                rhs(b) = e == 0.0 ? 0.0 : e * std::pow(xi, e - 1.0) / scale;
            }
            const Eigen::VectorXd sol = A.fullPivLu().solve(rhs);
            for (int k = 0; k < width; ++k) w[k] = sol(k);
        } else {
            detail::fd_weights(u[i], u.data() + s, width, w);
        }
        double acc = 0.0;
        for (int k = 0; k < width; ++k) acc += w[k] * values[s + k];
        out[i] = acc;
    }
    return out;
}

SampledFunction caputo_derivative(const SampledFunction& z, double mu, const PhiFunction& phi, double m,
                                  const StartBehaviour& start) {
    if (!(mu > 0.0 && mu < 1.0)) throw DomainError("derivative order must lie in (0, 1)");
    const std::vector<double> u = anchored_u(z, phi, m);
    std::vector<double> shifted(z.values.size());
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = z.values[i] - z.values[0];
    AbelOperator op(u, 1.0 - mu, start);
    // z - z(m) carries the integer powers and the declared lattice; the
    // integral shifts every exponent by 1 - mu
    std::vector<double> ex = {1.0, 2.0, 3.0, 4.0};
    for (double e : start_exponents(start)) ex.push_back(e);
    std::sort(ex.begin(), ex.end());
    for (double& e : ex) e += 1.0 - mu;
    return SampledFunction{z.grid, phi_derivative(u, op.apply(shifted), ex)};
}

}  // namespace fracdelay
