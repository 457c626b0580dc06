#include "fracdelay/product_rule.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracdelay/errors.hpp"
#include "fracdelay/simd.hpp"
#include "fracdelay/special_functions.hpp"

namespace fracdelay {

namespace {

constexpr double kExponentMerge = 0.02;
constexpr double kExponentLimit = 4.0;

bool near_integer(double e) { return std::fabs(e - std::round(e)) < kExponentMerge; }

template <int N>
detail::GaussRule make_rule() {
    using G = boost::math::quadrature::gauss<double, N>;
    const auto& a = G::abscissa();
    const auto& w = G::weights();
    detail::GaussRule r;
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] == 0.0) continue;
        r.x.push_back(-a[k]);
        r.w.push_back(w[k]);
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
        r.x.push_back(a[k]);
        r.w.push_back(w[k]);
    }
    return r;
}

}  // namespace

std::vector<double> start_exponents(const StartBehaviour& start, std::size_t max_count) {
    std::vector<double> out;
    for (double g : start.exponents) {
        if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("start exponents must be positive");
        if (near_integer(g)) continue;
        for (int k = 1; k * g < kExponentLimit; ++k)
            for (int j = 0; k * g + j < kExponentLimit; ++j) out.push_back(k * g + j);
    }
    std::sort(out.begin(), out.end());
    std::vector<double> kept;
    for (double e : out) {
        if (near_integer(e)) continue;
        if (!kept.empty() && e - kept.back() < kExponentMerge) continue;
        kept.push_back(e);
        if (kept.size() == max_count) break;
    }
    return kept;
}

namespace detail {

void lagrange_poly(const double* tau, int n, double coef[4][4]) {
    for (int j = 0; j < n; ++j) {
        double p[4] = {1.0, 0.0, 0.0, 0.0};
        int deg = 0;
        double denom = 1.0;
        for (int m = 0; m < n; ++m) {
            if (m == j) continue;
            // multiply by (t - tau_m)
            for (int k = deg + 1; k > 0; --k) p[k] = p[k - 1] - tau[m] * p[k];
            p[0] = -tau[m] * p[0];
            ++deg;
            denom *= tau[j] - tau[m];
        }
        for (int k = 0; k < 4; ++k) coef[j][k] = k < n ? p[k] / denom : 0.0;
    }
}

const GaussRule& gauss_rule(int n) {
    static const GaussRule r4 = make_rule<4>();
    static const GaussRule r8 = make_rule<8>();
    static const GaussRule r16 = make_rule<16>();
    static const GaussRule r30 = make_rule<30>();
    if (n <= 4) return r4;
    if (n <= 8) return r8;
    if (n <= 16) return r16;
    return r30;
}

void abel_cell_moments(double U, double ua, double ub, double mu, int deg, double m[4]) {
    const double h = ub - ua;
    const double a = U - ub;
    const double b = U - ua;
    if (a <= 0.0) {
        // exact Beta moments: h^mu k!/(mu (mu+1) ... (mu+k))
        double c = std::pow(h, mu) / mu;
        m[0] = c;
        for (int k = 1; k <= deg; ++k) {
            c *= k / (mu + k);
            m[k] = c;
        }
        return;
    }
    if (a < 1.5 * h) {
        double pb[4], pa[4];
        pb[0] = std::pow(b, mu);
        pa[0] = std::pow(a, mu);
        for (int j = 1; j <= deg; ++j) {
            pb[j] = pb[j - 1] * b;
            pa[j] = pa[j - 1] * a;
        }
        double d[4];
        for (int j = 0; j <= deg; ++j) d[j] = (pb[j] - pa[j]) / (mu + j);
        static constexpr double binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
        double hk = 1.0;
        for (int k = 0; k <= deg; ++k) {
            double s = 0.0, bp = 1.0;
            // (b - s)^k = sum_j C(k,j) b^(k-j) (-s)^j
            double bpow[4] = {1.0, b, b * b, b * b * b};
            for (int j = 0; j <= k; ++j) {
                bp = bpow[k - j];
                s += ((j & 1) ? -1.0 : 1.0) * binom[k][j] * bp * d[j];
            }
            m[k] = s / hk;
            hk *= h;
        }
        return;
    }
    const GaussRule& g = gauss_rule(a < 6.0 * h ? 16 : a < 24.0 * h ? 8 : 4);
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t q = 0; q < g.x.size(); ++q) {
        const double t = 0.5 * (g.x[q] + 1.0);
        const double w = g.w[q] * std::pow(b - t * h, mu - 1.0);
        double tk = 1.0;
        for (int k = 0; k <= deg; ++k) {
            acc[k] += w * tk;
            tk *= t;
        }
    }
    for (int k = 0; k <= deg; ++k) m[k] = 0.5 * h * acc[k];
}

void fd_weights(double x0, const double* x, int n, double* w) {
    // Fornberg's recursion restricted to derivative orders 0 and 1.
    std::vector<double> c0(n, 0.0), c1(n, 0.0);
    double c_1 = 1.0;
    double c4 = x[0] - x0;
    c0[0] = 1.0;
    for (int i = 1; i < n; ++i) {
        double c_2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c_2 *= c3;
            if (j == i - 1) {
                c1[i] = c_1 * (c0[i - 1] - c5 * c1[i - 1]) / c_2;
                c0[i] = -c_1 * c5 * c0[i - 1] / c_2;
            }
            c1[j] = (c4 * c1[j] - c0[j]) / c3;
            c0[j] = c4 * c0[j] / c3;
        }
        c_1 = c_2;
    }
    for (int i = 0; i < n; ++i) w[i] = c1[i];
}

bool nearly_uniform(const std::vector<double>& u) {
    if (u.size() < 3) return true;
    const double h = (u.back() - u.front()) / static_cast<double>(u.size() - 1);
    const double tol = 1e-13 * h + 8.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(u.front()), std::fabs(u.back()));
    for (std::size_t i = 1; i < u.size(); ++i)
        if (std::fabs((u[i] - u[i - 1]) - h) > tol) return false;
    return true;
}

}  // namespace detail

AbelOperator::AbelOperator(std::vector<double> u, double mu, const StartBehaviour& start)
    : u_(std::move(u)), mu_(mu) {
    const std::size_t n = u_.size();
    if (n < 2) throw DomainError("AbelOperator needs at least two nodes");
    if (!(mu > 0.0 && mu <= 1.0)) throw DomainError("order must lie in (0, 1]");
    for (std::size_t i = 1; i < n; ++i)
        if (!(u_[i] > u_[i - 1])) throw DomainError("transformed grid must be strictly increasing");

    const double rg = rgamma(mu);
    w_.assign(n * (n + 1) / 2, 0.0);

    const bool uniform = detail::nearly_uniform(u_);
    const double hu = (u_.back() - u_.front()) / static_cast<double>(n - 1);
    // uniform grids: moments depend only on the distance d = i - c
    std::vector<std::array<double, 4>> mom;
    if (uniform) {
        mom.resize(n);
        for (std::size_t d = 1; d < n; ++d) {
            double m[4];
            detail::abel_cell_moments(0.0, -static_cast<double>(d) * hu, -static_cast<double>(d - 1) * hu, mu, 3, m);
            mom[d] = {m[0], m[1], m[2], m[3]};
        }
    }

    // cubic Lagrange tables per cell and stencil offset c - j0 in {0, 1, 2}
    std::vector<std::array<std::array<double, 4>, 4>> lag(3 * n);
    for (std::size_t c = 0; c + 1 < n; ++c) {
        for (std::size_t o = 0; o < 3; ++o) {
            if (o > c || c - o + 3 >= n) continue;
            const double h = u_[c + 1] - u_[c];
            double tau[4];
            for (int j = 0; j < 4; ++j) tau[j] = (u_[c - o + j] - u_[c]) / h;
            double L[4][4];
            detail::lagrange_poly(tau, 4, L);
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) lag[3 * c + o][j][k] = L[j][k];
        }
    }

    for (std::size_t i = 1; i < n; ++i) {
        double* row = w_.data() + i * (i + 1) / 2;
        for (std::size_t c = 0; c < i; ++c) {
            std::size_t j0;
            int deg;
            detail::cubic_stencil(i, c, j0, deg);
            double m[4];
            if (uniform && deg == 3) {
                for (int k = 0; k < 4; ++k) m[k] = mom[i - c][k];
            } else {
                detail::abel_cell_moments(u_[i], u_[c], u_[c + 1], mu, deg, m);
            }
            double L[4][4];
            if (deg == 3) {
                const auto& t = lag[3 * c + (c - j0)];
                for (int j = 0; j < 4; ++j)
                    for (int k = 0; k < 4; ++k) L[j][k] = t[j][k];
            } else {
                const double h = u_[c + 1] - u_[c];
                double tau[4];
                for (int j = 0; j <= deg; ++j) tau[j] = (u_[j0 + j] - u_[c]) / h;
                detail::lagrange_poly(tau, deg + 1, L);
            }
            for (int j = 0; j <= deg; ++j) {
                double s = 0.0;
                for (int k = 0; k <= deg; ++k) s += L[j][k] * m[k];
                row[j0 + j] += s;
            }
        }
        for (std::size_t j = 0; j <= i; ++j) row[j] *= rg;
    }

    // starting corrections: exact on (u - u0)^e for e in {0,1,2,3} and the declared lattice
    std::vector<double> ex = {0.0, 1.0, 2.0, 3.0};
    for (double e : start_exponents(start)) ex.push_back(e);
    std::sort(ex.begin(), ex.end());
    if (ex.size() > n) ex.resize(n);
    const std::size_t M = ex.size();

    const double X = u_[M - 1] - u_[0];
    Eigen::MatrixXd A(M, M);
    for (std::size_t e = 0; e < M; ++e)
        for (std::size_t k = 0; k < M; ++k) A(e, k) = std::pow((u_[k] - u_[0]) / X, ex[e]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);

    std::vector<std::vector<double>> pw(M, std::vector<double>(n));
    for (std::size_t e = 0; e < M; ++e)
        for (std::size_t j = 0; j < n; ++j) pw[e][j] = std::pow(u_[j] - u_[0], ex[e]);
    std::vector<double> gfac(M);
    for (std::size_t e = 0; e < M; ++e) gfac[e] = gamma(ex[e] + 1.0) * rgamma(ex[e] + 1.0 + mu);

    corr_ = Eigen::MatrixXd::Zero(n, M);
    Eigen::VectorXd rhs(M);
    for (std::size_t i = 1; i < n; ++i) {
        const double U = u_[i] - u_[0];
        for (std::size_t e = 0; e < M; ++e) {
            const double exact = gfac[e] * std::pow(U, ex[e] + mu);
            const double rule = simd::dot(row(i), pw[e].data(), i + 1);
            rhs(e) = (exact - rule) / std::pow(X, ex[e]);
        }
        corr_.row(i) = lu.solve(rhs).transpose();
    }
}

void AbelOperator::apply(const double* z, double* out) const {
    const std::size_t n = u_.size();
    const std::size_t M = static_cast<std::size_t>(corr_.cols());
    out[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        double s = simd::dot(row(i), z, i + 1);
        double c = 0.0;
        for (std::size_t k = 0; k < M; ++k) c += corr_(i, k) * z[k];
        out[i] = s + c;
    }
}

std::vector<double> AbelOperator::apply(const std::vector<double>& z) const {
    if (z.size() != u_.size()) throw DomainError("sample count does not match the operator grid");
    std::vector<double> out(z.size());
    apply(z.data(), out.data());
    return out;
}

}  // namespace fracdelay
