#include "fracdelay/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fracdelay/errors.hpp"
#include "fracdelay/product_rule.hpp"
#include "fracdelay/simd.hpp"
#include "fracdelay/special_functions.hpp"

namespace fracdelay {

namespace {

constexpr double kNearCells = 6.0;   // closed-form moments below this distance
constexpr double kFarCells = 24.0;   // GL-4 beyond this distance
constexpr std::size_t kPhiSamples = 257;
constexpr std::size_t kInnerMax = 200;

std::string node_msg(const char* what, std::size_t j, double ell) {
    std::ostringstream os;
    os.precision(17);
    os << what << " at node " << j << " (l = " << ell << ")";
    return os.str();
}

// Kernel x^(mu-1) E_{p,mu}(-rho x^p) and its primitives
//   A0(x) = x^mu E_{p,mu+1}(-rho x^p)
//   A1(x) = x^(mu+1) (E_{p,mu+1} - E_{p,mu+2})(-rho x^p)
class KernelFamily {
public:
    KernelFamily(double mu, double p, double rho, double xmax)
        : mu_(mu), p_(p), rho_(rho), zero_(rho == 0.0) {
        const double tmax = rho * std::pow(xmax, p) * (1.0 + 1e-12) + 1e-300;
        if (zero_) {
            c0_ = rgamma(mu);
            c1_ = rgamma(mu + 1.0);
            c2_ = rgamma(mu + 2.0);
        } else {
            e0_.emplace(p, mu, tmax);
            e1_.emplace(p, mu + 1.0, tmax);
            e2_.emplace(p, mu + 2.0, tmax);
        }
    }

    void kernel(const std::vector<double>& x, std::vector<double>& out) const {
        out.resize(x.size());
        if (zero_) {
            for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::pow(x[i], mu_ - 1.0) * c0_;
            return;
        }
        e0_->eval(thetas(x).data(), out.data(), x.size());
        for (std::size_t i = 0; i < x.size(); ++i) out[i] *= std::pow(x[i], mu_ - 1.0);
    }

    void primitives(const std::vector<double>& x, std::vector<double>& a0, std::vector<double>& a1) const {
        a0.resize(x.size());
        a1.resize(x.size());
        std::vector<double> f1(x.size(), c1_), f2(x.size(), c2_);
        if (!zero_) {
            const auto t = thetas(x);
            e1_->eval(t.data(), f1.data(), x.size());
            e2_->eval(t.data(), f2.data(), x.size());
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0.0) {
                a0[i] = a1[i] = 0.0;
                continue;
            }
            const double xm = std::pow(x[i], mu_);
            a0[i] = xm * f1[i];
            a1[i] = xm * x[i] * (f1[i] - f2[i]);
        }
    }

private:
    std::vector<double> thetas(const std::vector<double>& x) const {
        std::vector<double> t(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) t[i] = -rho_ * std::pow(x[i], p_);
        return t;
    }

    double mu_, p_, rho_;
    bool zero_;
    double c0_ = 0.0, c1_ = 0.0, c2_ = 0.0;
    std::optional<MlBatch> e0_, e1_, e2_;
};

}  // namespace

// ---------------------------------------------------------------- weights

ProductWeights::ProductWeights(const std::vector<double>& u, double mu, double p, double rho) : n_(u.size()) {
    if (n_ < 2) throw DomainError("product weights need at least two nodes");
    if (!(mu > 0.0 && mu <= 1.0)) throw DomainError("order must lie in (0, 1]");
    if (!(rho >= 0.0) || (rho > 0.0 && !(p > 0.0))) throw DomainError("kernel parameters out of range");
    for (std::size_t i = 1; i < n_; ++i)
        if (!(u[i] > u[i - 1])) throw DomainError("transformed grid must be strictly increasing");
    w_.assign(n_ * (n_ + 1) / 2, 0.0);

    const KernelFamily fam(mu, p, rho, u.back() - u.front());
    const detail::GaussRule& g8 = detail::gauss_rule(8);
    const detail::GaussRule& g4 = detail::gauss_rule(4);

    if (detail::nearly_uniform(u)) {
        const double h = (u.back() - u.front()) / static_cast<double>(n_ - 1);
        // wl[d], wr[d]: cell at distance d (nodes i-d, i-d+1) from the row node i
        std::vector<double> wl(n_, 0.0), wr(n_, 0.0);
        std::vector<double> px(n_);
        for (std::size_t d = 0; d < n_; ++d) px[d] = static_cast<double>(d) * h;
        std::vector<double> a0, a1;
        const std::size_t near = std::min<std::size_t>(n_ - 1, static_cast<std::size_t>(kNearCells) + 1);
        std::vector<double> pxn(px.begin(), px.begin() + static_cast<long>(near) + 1);
        fam.primitives(pxn, a0, a1);
        for (std::size_t d = 1; d <= near; ++d) {
            const double a = px[d - 1], b = px[d];
            const double m0 = a0[d] - a0[d - 1], m1 = a1[d] - a1[d - 1];
            wl[d] = (m1 - a * m0) / h;
            wr[d] = (b * m0 - m1) / h;
        }
        std::vector<double> xs, ks;
        std::vector<const detail::GaussRule*> rules(n_, nullptr);
        for (std::size_t d = near + 1; d < n_; ++d) {
            const double a = px[d - 1];
            rules[d] = a < kFarCells * h ? &g8 : &g4;
            for (double t : rules[d]->x) xs.push_back(a + 0.5 * (t + 1.0) * h);
        }
        fam.kernel(xs, ks);
        std::size_t q = 0;
        for (std::size_t d = near + 1; d < n_; ++d) {
            const double a = px[d - 1], b = px[d];
            double l = 0.0, r = 0.0;
            for (std::size_t k = 0; k < rules[d]->x.size(); ++k, ++q) {
                const double wk = 0.5 * rules[d]->w[k] * ks[q];
                l += wk * (xs[q] - a);
                r += wk * (b - xs[q]);
            }
            wl[d] = l;
            wr[d] = r;
        }
        for (std::size_t i = 1; i < n_; ++i) {
            double* row = w_.data() + i * (i + 1) / 2;
            for (std::size_t j = 0; j <= i; ++j) {
                double s = 0.0;
                if (j < i) s += wl[i - j];
                if (j >= 1) s += wr[i - j + 1];
                row[j] = s;
            }
        }
        return;
    }

    std::vector<double> xs, ks, pa, a0, a1;
    for (std::size_t i = 1; i < n_; ++i) {
        double* row = w_.data() + i * (i + 1) / 2;
        const double U = u[i];
        xs.clear();
        pa.clear();
        std::vector<int> kind(i);  // 0 closed form, 8 or 4 Gauss points
        for (std::size_t c = 0; c < i; ++c) {
            const double D = u[c + 1] - u[c];
            const double a = U - u[c + 1];
            if (a < kNearCells * D) {
                kind[c] = 0;
                pa.push_back(a);
                pa.push_back(U - u[c]);
            } else {
                const detail::GaussRule& g = a < kFarCells * D ? g8 : g4;
                kind[c] = static_cast<int>(g.x.size());
                for (double t : g.x) xs.push_back(a + 0.5 * (t + 1.0) * D);
            }
        }
        fam.kernel(xs, ks);
        fam.primitives(pa, a0, a1);
        std::size_t q = 0, r = 0;
        for (std::size_t c = 0; c < i; ++c) {
            const double D = u[c + 1] - u[c];
            const double a = U - u[c + 1], b = U - u[c];
            double wl = 0.0, wr = 0.0;
            if (kind[c] == 0) {
                const double m0 = a0[r + 1] - a0[r], m1 = a1[r + 1] - a1[r];
                wl = (m1 - a * m0) / D;
                wr = (b * m0 - m1) / D;
                r += 2;
            } else {
                const detail::GaussRule& g = kind[c] == static_cast<int>(g8.x.size()) ? g8 : g4;
                for (std::size_t k = 0; k < g.x.size(); ++k, ++q) {
                    const double wk = 0.5 * g.w[k] * ks[q];
                    wl += wk * (xs[q] - a);
                    wr += wk * (b - xs[q]);
                }
            }
            row[c] += wl;
            row[c + 1] += wr;
        }
    }
}

double ProductWeights::apply_row(std::size_t i, const double* g) const { return simd::dot(row(i), g, i + 1); }

// ---------------------------------------------------------------- problem

void ProblemSpec::validate() const {
    if (!(kappa > 0.0 && kappa < mu && mu <= 1.0)) throw DomainError("orders must satisfy 0 < kappa < mu <= 1");
    if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("rho must be > 0");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be > 0");
    if (!(m > 0.0 && m < n) || !std::isfinite(n)) throw DomainError("interval must satisfy 0 < m < n");
    if (!(lipschitz > 0.0) || !std::isfinite(lipschitz)) throw DomainError("Lipschitz constant must be > 0");
    if (!Q) throw DomainError("right-hand side Q is not set");
    if (!delay) throw DomainError("delay map f is not set");
    if (!alpha) throw DomainError("history alpha is not set");
    if (auto v = validate_phi(phi, m - sigma, n, kPhiSamples))
        throw DomainError("Phi invalid on [m - sigma, n]: " + v->reason);

    const auto pts = uniform_grid(m, n, kPhiSamples);
    for (std::size_t j = 0; j < pts.size(); ++j) {
        const double f = delay(pts[j]);
        if (!std::isfinite(f) || f > pts[j]) throw DomainError(node_msg("delay f(l) > l", j, pts[j]));
        if (f < m - sigma || f > n) throw DomainError(node_msg("delay f(l) outside [m - sigma, n]", j, pts[j]));
    }

    // jump test: a discontinuity keeps its size when the spacing shrinks
    auto max_jump = [&](std::size_t cells) {
        double prev = alpha(m - sigma), worst = 0.0, scale = std::fabs(prev);
        for (std::size_t k = 1; k <= cells; ++k) {
            const double v = alpha(m - sigma + sigma * static_cast<double>(k) / static_cast<double>(cells));
            if (!std::isfinite(v)) throw DomainError("history alpha is not finite");
            worst = std::max(worst, std::fabs(v - prev));
            scale = std::max(scale, std::fabs(v));
            prev = v;
        }
        return std::pair{worst, scale};
    };
    const auto [jh, s1] = max_jump(256);
    const auto [jq, s2] = max_jump(1024);
    if (jh > 1e-9 * (1.0 + std::max(s1, s2)) && jq > 0.8 * jh) throw DomainError("history alpha is not continuous");
}

void SolverConfig::validate(double lipschitz) const {
    if (n_nodes < 16) throw DomainError("n_nodes must be >= 16");
    if (!(tol > 0.0)) throw DomainError("tol must be > 0");
    if (max_iter < 1) throw DomainError("max_iter must be >= 1");
    const double b = resolved_beta(lipschitz);
    if (!(b > 0.0) || !contraction_certificate(lipschitz, b))
        throw DomainError("beta must exceed 2 L_Q for the contraction certificate");
}

bool contraction_certificate(double lipschitz, double beta) { return 2.0 * lipschitz / beta < 1.0; }

double kernel(double ell, double eta, const ProblemSpec& spec) {
    if (!(eta < ell)) throw DomainError("kernel needs eta < l");
    if (eta < spec.m || ell > spec.n) throw DomainError("kernel arguments outside [m, n]");
    const double d = spec.phi(ell) - spec.phi(eta);
    const double p = spec.mu - spec.kappa;
    return spec.phi.deriv(eta) * std::pow(d, spec.mu - 1.0) * ml2(p, spec.mu, -spec.rho * std::pow(d, p));
}

// ---------------------------------------------------------------- solver

namespace {

std::vector<double> build_grid(const ProblemSpec& s, std::size_t n_nodes, std::size_t& hist) {
    const double h = (s.n - s.m) / static_cast<double>(n_nodes - 1);
    const std::size_t H = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(s.sigma / h - 1e-9)));
    std::vector<double> g;
    g.reserve(H + n_nodes);
    for (std::size_t k = 0; k < H; ++k) g.push_back(s.m - s.sigma + s.sigma * static_cast<double>(k) / static_cast<double>(H));
    hist = g.size();
    for (std::size_t k = 0; k < n_nodes; ++k) g.push_back(s.m + h * static_cast<double>(k));
    g[hist] = s.m;
    g.back() = s.n;
    return g;
}

std::vector<double> main_u(const ProblemSpec& s, const std::vector<double>& grid, std::size_t hist) {
    std::vector<double> u(grid.begin() + static_cast<long>(hist), grid.end());
    u = s.phi.transform(u);
    return u;
}

ProblemSpec validated(ProblemSpec s) {
    s.validate();
    return s;
}

}  // namespace

VolterraSolver::VolterraSolver(ProblemSpec spec, std::size_t n_nodes)
    : spec_(validated(std::move(spec))),
      grid_(build_grid(spec_, n_nodes < 2 ? 2 : n_nodes, hist_)),
      kw_(main_u(spec_, grid_, hist_), spec_.mu, spec_.mu - spec_.kappa, spec_.rho),
      abel_(main_u(spec_, grid_, hist_), spec_.mu, 1.0, 0.0) {
    if (n_nodes < 16) throw DomainError("n_nodes must be >= 16");
    const double u0 = spec_.phi(spec_.m);
    const std::size_t N = main_nodes();
    du_.resize(N);
    dk_.resize(N);
    dt_.resize(N);
    for (std::size_t j = 0; j < N; ++j) {
        const double ell = grid_[hist_ + j];
        du_[j] = j == 0 ? 0.0 : spec_.phi(ell) - u0;
        const double f = spec_.delay(ell);
        if (!std::isfinite(f) || f > ell) throw DomainError(node_msg("delay f(l) > l", j, ell));
        if (f < grid_.front() || f > grid_.back())
            throw DomainError(node_msg("delay f(l) outside [m - sigma, n]", j, ell));
        auto it = std::upper_bound(grid_.begin(), grid_.end(), f);
        std::size_t k = static_cast<std::size_t>(it - grid_.begin());
        k = k == 0 ? 0 : k - 1;
        if (grid_[k] == f || k + 1 == grid_.size()) {
            dk_[j] = k;
            dt_[j] = 0.0;
        } else {
            dk_[j] = k;
            dt_[j] = (f - grid_[k]) / (grid_[k + 1] - grid_[k]);
        }
    }
}

Trajectory VolterraSolver::initial_guess() const {
    Trajectory t{grid_, std::vector<double>(grid_.size()), hist_};
    for (std::size_t k = 0; k < hist_; ++k) t.values[k] = spec_.alpha(grid_[k]);
    const double a = spec_.alpha(spec_.m);
    for (std::size_t k = hist_; k < grid_.size(); ++k) t.values[k] = a;
    return t;
}

Trajectory VolterraSolver::linear_solution(const std::vector<double>& h_main, double alpha_at_m) const {
    const std::size_t N = main_nodes();
    if (h_main.size() != N) throw DomainError("forcing size does not match the grid");
    for (double v : h_main)
        if (!std::isfinite(v)) throw DomainError("forcing is not finite");
    Trajectory t{grid_, std::vector<double>(grid_.size()), hist_};
    for (std::size_t k = 0; k < hist_; ++k) t.values[k] = spec_.alpha(grid_[k]);
    t.values[hist_] = alpha_at_m;
    for (std::size_t i = 1; i < N; ++i) t.values[hist_ + i] = alpha_at_m + kw_.apply_row(i, h_main.data());
    return t;
}

void VolterraSolver::check_trajectory(const Trajectory& z) const {
    if (z.grid.size() != grid_.size() || z.values.size() != grid_.size() || z.history_len != hist_)
        throw DomainError("trajectory does not match the solver grid");
}

double VolterraSolver::delayed(const std::vector<double>& values, std::size_t j) const {
    const std::size_t k = dk_[j];
    const double t = dt_[j];
    if (t == 0.0) return values[k];
    return (1.0 - t) * values[k] + t * values[k + 1];
}

Trajectory VolterraSolver::apply_P(const Trajectory& z, const std::vector<double>* forcing) const {
    check_trajectory(z);
    const std::size_t N = main_nodes();
    if (forcing && forcing->size() != N) throw DomainError("forcing size does not match the grid");
    std::vector<double> g(N);
    for (std::size_t j = 0; j < N; ++j) {
        g[j] = spec_.Q(grid_[hist_ + j], z.values[hist_ + j], delayed(z.values, j));
        if (forcing) g[j] += (*forcing)[j];
    }
    Trajectory out{grid_, z.values, hist_};
    const double a = spec_.alpha(spec_.m);
    out.values[hist_] = a;
    for (std::size_t i = 1; i < N; ++i) out.values[hist_ + i] = a + kw_.apply_row(i, g.data());
    return out;
}

std::vector<double> VolterraSolver::bielecki_weights(double beta) const {
    if (!(beta > 0.0)) throw DomainError("beta must be > 0");
    std::vector<double> w(grid_.size(), 1.0);
    for (std::size_t j = 1; j < main_nodes(); ++j) w[hist_ + j] = ml1(spec_.mu, beta * std::pow(du_[j], spec_.mu));
    return w;
}

double VolterraSolver::bielecki_norm(const Trajectory& diff, double beta) const {
    check_trajectory(diff);
    const auto w = bielecki_weights(beta);
    double s = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) s = std::max(s, std::fabs(diff.values[k]) / w[k]);
    return s;
}

PicardResult VolterraSolver::picard(const SolverConfig& cfg, const std::vector<double>* forcing) const {
    cfg.validate(spec_.lipschitz);
    const auto w = bielecki_weights(cfg.resolved_beta(spec_.lipschitz));
    PicardResult r;
    Trajectory z = initial_guess();
    for (std::size_t it = 1; it <= cfg.max_iter; ++it) {
        Trajectory next = apply_P(z, forcing);
        double res = 0.0;
        for (std::size_t k = 0; k < w.size(); ++k) res = std::max(res, std::fabs(next.values[k] - z.values[k]) / w[k]);
        if (!std::isfinite(res)) throw NonConvergence("Picard iterate is not finite", r.residuals);
        if (!r.residuals.empty()) r.ratios.push_back(res / r.residuals.back());
        r.residuals.push_back(res);
        z = std::move(next);
        if (res <= cfg.tol) {
            r.trajectory = std::move(z);
            r.iterations = it;
            r.final_residual = res;
            return r;
        }
    }
    std::ostringstream os;
    os << "Picard iteration did not reach tol " << cfg.tol << " in " << cfg.max_iter << " iterations (residual "
       << r.residuals.back() << ")";
    throw NonConvergence(os.str(), r.residuals);
}

Trajectory VolterraSolver::march(const SolverConfig& cfg) const {
    cfg.validate(spec_.lipschitz);
    const std::size_t N = main_nodes();
    Trajectory z = initial_guess();
    std::vector<double>& v = z.values;
    std::vector<double> g(N, 0.0);
    const double a = spec_.alpha(spec_.m);
    const double inner_tol = cfg.tol / 10.0;
    auto Qj = [&](std::size_t j) { return spec_.Q(grid_[hist_ + j], v[hist_ + j], delayed(v, j)); };
    g[0] = Qj(0);
    for (std::size_t i = 1; i < N; ++i) {
        const double* row = kw_.row(i);
        const double partial = a + simd::dot(row, g.data(), i);
        double x = v[hist_ + i - 1];
        bool ok = false;
        for (double omega : {1.0, 0.5}) {
            x = v[hist_ + i - 1];
            for (std::size_t it = 0; it < kInnerMax; ++it) {
                v[hist_ + i] = x;
                const double y = partial + row[i] * Qj(i);
                const double step = y - x;
                x += omega * step;
                if (!std::isfinite(x)) break;
                if (std::fabs(step) <= inner_tol * std::max(1.0, std::fabs(x))) {
                    ok = true;
                    break;
                }
            }
            if (ok) break;
        }
        if (!ok) throw NonConvergence(node_msg("marching fixed point failed", i, grid_[hist_ + i]), {}, static_cast<long>(i));
        v[hist_ + i] = x;
        g[i] = Qj(i);
    }
    return z;
}

std::vector<double> VolterraSolver::abel_sweep(const std::vector<double>& b, double lipschitz) const {
    if (b.size() != grid_.size()) throw DomainError("majorant size does not match the grid");
    const std::size_t N = main_nodes();
    std::vector<double> s(N), out(N, 0.0);
    for (std::size_t j = 0; j < N; ++j) s[j] = b[hist_ + j] + delayed(b, j);
    for (std::size_t i = 1; i < N; ++i) out[i] = lipschitz * abel_.apply_row(i, s.data());
    return out;
}

// ---------------------------------------------------------------- free functions

Trajectory linear_solution(const SampledFunction& h, double alpha_at_m, const ProblemSpec& spec, std::size_t n_nodes) {
    h.validate();
    const VolterraSolver solver(spec, n_nodes);
    const std::size_t H = solver.history_len();
    const auto& grid = solver.grid();
    const double span = spec.n - spec.m;
    if (h.grid.front() > spec.m + 1e-12 * span || h.grid.back() < spec.n - 1e-12 * span)
        throw DomainError("forcing does not cover [m, n]");
    std::vector<double> hm(solver.main_nodes());
    for (std::size_t j = 0; j < hm.size(); ++j) {
        const double x = std::clamp(grid[H + j], h.grid.front(), h.grid.back());
        auto it = std::upper_bound(h.grid.begin(), h.grid.end(), x);
        std::size_t k = it == h.grid.begin() ? 0 : static_cast<std::size_t>(it - h.grid.begin()) - 1;
        if (k + 1 >= h.grid.size()) k = h.grid.size() - 2;
        const double t = (x - h.grid[k]) / (h.grid[k + 1] - h.grid[k]);
        hm[j] = t == 0.0 ? h.values[k] : (1.0 - t) * h.values[k] + t * h.values[k + 1];
    }
    return solver.linear_solution(hm, alpha_at_m);
}

Trajectory apply_P(const Trajectory& z, const ProblemSpec& spec) {
    if (z.history_len >= z.size()) throw DomainError("trajectory has no main segment");
    const VolterraSolver solver(spec, z.size() - z.history_len);
    if (solver.grid() != z.grid) throw DomainError("trajectory grid does not match the solver grid");
    for (std::size_t k = 0; k < z.history_len; ++k)
        if (z.values[k] != spec.alpha(z.grid[k])) throw DomainError("trajectory history differs from alpha");
    return solver.apply_P(z);
}

PicardResult picard_solve(const ProblemSpec& spec, const SolverConfig& cfg) {
    cfg.validate(spec.lipschitz);
    return VolterraSolver(spec, cfg.n_nodes).picard(cfg);
}

Trajectory march_solve(const ProblemSpec& spec, const SolverConfig& cfg) {
    cfg.validate(spec.lipschitz);
    return VolterraSolver(spec, cfg.n_nodes).march(cfg);
}

double bielecki_norm(const Trajectory& diff, double beta, double mu, const PhiFunction& phi, double m) {
    if (!(beta > 0.0)) throw DomainError("beta must be > 0");
    if (diff.values.size() != diff.grid.size()) throw DomainError("trajectory sizes differ");
    const double u0 = phi(m);
    double s = 0.0;
    for (std::size_t k = 0; k < diff.size(); ++k) {
        const double ell = diff.grid[k];
        const double w = ell <= m ? 1.0 : ml1(mu, beta * std::pow(phi(ell) - u0, mu));
        s = std::max(s, std::fabs(diff.values[k]) / w);
    }
    return s;
}

double reference_rhs(double ell, double now, double delayed) {
    return 0.5 * std::sin(ell) * (now + std::sqrt(1.0 + now * now)) + std::sin(delayed);
}

ProblemSpec reference_problem() {
    ProblemSpec s;
    s.mu = 0.5;
    s.kappa = 0.45;
    s.rho = 1.0;
    s.sigma = 0.5;
    s.m = 1.0;
    s.n = 2.0;
    s.phi = PhiFunction::identity();
    s.Q = reference_rhs;
    s.lipschitz = 1.0;
    s.delay = [sigma = s.sigma](double ell) { return ell - sigma; };
    s.alpha = [](double) { return 1.0; };
    return s;
}

}  // namespace fracdelay
