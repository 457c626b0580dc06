#include "fracdelay/laplace.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fracdelay/errors.hpp"
#include "fracdelay/simd.hpp"
#include "fracdelay/special_functions.hpp"

namespace fracdelay {

namespace {

constexpr double kQuadRel = 1e-12;

std::vector<double> anchored_u(const SampledFunction& z, const PhiFunction& phi, double m, const char* what) {
    z.validate();
    if (z.grid.front() != m) throw DomainError(std::string(what) + " grid is not anchored at m");
    std::vector<double> u = phi.transform(z.grid);
    for (std::size_t i = 1; i < u.size(); ++i)
        if (!(u[i] > u[i - 1])) throw DomainError("Phi is not strictly increasing on the grid");
    return u;
}

std::vector<double> with_integers(const StartBehaviour& start) {
    std::vector<double> ex = {0.0, 1.0, 2.0, 3.0};
    for (double e : start_exponents(start)) ex.push_back(e);
    std::sort(ex.begin(), ex.end());
    return ex;
}

}  // namespace

void TransformQuery::validate(double m) const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("transform variable lambda must be > 0");
    if (!(horizon > m) || !std::isfinite(horizon)) throw DomainError("transform horizon must exceed m");
    if (!(tol > 0.0)) throw DomainError("transform tolerance must be > 0");
}

double envelope_horizon(const PhiFunction& phi, double m, double lambda, const Envelope& env, double tol) {
    if (!(lambda > env.rate)) throw DomainError("envelope rate must be below lambda");
    if (!phi.has_inverse()) throw DomainError("Phi has no inverse");
    const double d = lambda - env.rate;
    // scale e^{-d W} / d < tol / 10
    const double w = std::max(0.0, std::log(10.0 * env.scale / (d * tol)) / d);
    return phi.inverse(phi(m) + w);
}

TransformResult glt(const std::function<double(double)>& z, const PhiFunction& phi, double m,
                    const TransformQuery& q, std::optional<Envelope> envelope) {
    q.validate(m);
    if (!phi.has_inverse()) throw DomainError("Phi has no inverse");
    const double u0 = phi(m);
    const double width = phi(q.horizon) - u0;
    if (!(width > 0.0)) throw DomainError("Phi does not increase over [m, horizon]");

    thread_local boost::math::quadrature::tanh_sinh<double> ts;
    const double panel = 2.0 / q.lambda;
    const std::size_t panels = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(width / panel)));

    TransformResult r;
    double total = 0.0, err = 0.0;
    for (std::size_t k = 0; k < panels; ++k) {
        const double a = width * static_cast<double>(k) / static_cast<double>(panels);
        const double b = width * static_cast<double>(k + 1) / static_cast<double>(panels);
        // integrate over d = u - u0 so the anchor singularity sits at d = 0
        auto f = [&](double d, double dc) {
            if (k == 0 && dc < 0.0) d = -dc;
            const double ell = phi.inverse(u0 + d);
            return std::exp(-q.lambda * d) * z(ell);
        };
        double e = 0.0, l1 = 0.0;
        total += ts.integrate(f, a, b, kQuadRel, &e, &l1);
        err += e;
    }
    if (!(err <= q.tol) || !std::isfinite(total)) {
        std::ostringstream os;
        os << "transform quadrature error estimate " << err << " exceeds tolerance " << q.tol;
        throw AccuracyError(os.str());
    }
    r.value = total;
    r.error_estimate = err;
    r.tail_bound = std::numeric_limits<double>::infinity();
    if (envelope && envelope->rate < q.lambda) {
        const double d = q.lambda - envelope->rate;
        r.tail_bound = envelope->scale * std::exp(-d * width) / d;
    }
    return r;
}

double glt(const SampledFunction& z, const PhiFunction& phi, double m, double lambda, const StartBehaviour& start) {
    if (!(lambda > 0.0)) throw DomainError("transform variable lambda must be > 0");
    const std::vector<double> u = anchored_u(z, phi, m, "sampled");
    const std::size_t n = u.size();
    const double u0 = u[0];
    const detail::GaussRule& g = detail::gauss_rule(8);

    std::vector<double> w(n, 0.0);
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t j0;
        int deg;
        detail::cubic_stencil(n - 1, c, j0, deg);
        const double h = u[c + 1] - u[c];
        double tau[4];
        for (int j = 0; j <= deg; ++j) tau[j] = (u[j0 + j] - u[c]) / h;
        double L[4][4];
        detail::lagrange_poly(tau, deg + 1, L);
        double mom[4] = {0.0, 0.0, 0.0, 0.0};
        for (std::size_t k = 0; k < g.x.size(); ++k) {
            const double t = 0.5 * (g.x[k] + 1.0);
            const double e = 0.5 * h * g.w[k] * std::exp(-lambda * (u[c] + t * h - u0));
            double tk = 1.0;
            for (int p = 0; p <= deg; ++p) {
                mom[p] += e * tk;
                tk *= t;
            }
        }
        for (int j = 0; j <= deg; ++j) {
            double s = 0.0;
            for (int p = 0; p <= deg; ++p) s += L[j][p] * mom[p];
            w[j0 + j] += s;
        }
    }

    std::vector<double> ex = with_integers(start);
    if (ex.size() > n) ex.resize(n);
    const std::size_t M = ex.size();
    const double X = u[M - 1] - u0;
    const double XN = u[n - 1] - u0;
    Eigen::MatrixXd A(M, M);
    Eigen::VectorXd rhs(M);
    std::vector<double> pw(n);
    for (std::size_t e = 0; e < M; ++e) {
        for (std::size_t k = 0; k < M; ++k) A(e, k) = std::pow((u[k] - u0) / X, ex[e]);
        for (std::size_t j = 0; j < n; ++j) pw[j] = std::pow(u[j] - u0, ex[e]);
        const double exact = std::pow(lambda, -ex[e] - 1.0) * boost::math::tgamma_lower(ex[e] + 1.0, lambda * XN);
        rhs(e) = (exact - simd::dot(w.data(), pw.data(), n)) / std::pow(X, ex[e]);
    }
    const Eigen::VectorXd s = A.fullPivLu().solve(rhs);
    for (std::size_t k = 0; k < M; ++k) w[k] += s(k);
    return simd::dot(w.data(), z.values.data(), n);
}

SampledFunction phi_convolve(const SampledFunction& z1, const SampledFunction& z2, const PhiFunction& phi, double m,
                             const StartBehaviour& start1, const StartBehaviour& start2) {
    if (!phi.has_inverse()) throw DomainError("Phi has no inverse");
    const std::vector<double> u1 = anchored_u(z1, phi, m, "first factor");
    const std::vector<double> u2 = anchored_u(z2, phi, m, "second factor");
    const std::size_t n = u1.size();
    const double u0 = u1[0];
    const bool aligned = z1.grid == z2.grid && detail::nearly_uniform(u1);

    const double span2 = u2.back() - u2.front();
    auto z2_at = [&](double r, std::size_t node) {
        const double slack = 1e-12 * std::max(1.0, span2);
        if (r < u2.front() - slack || r > u2.back() + slack) {
            std::ostringstream os;
            os << "reflected argument " << phi.inverse(r) << " at node " << node << " leaves the sampled range of z2";
            throw DomainError(os.str());
        }
        auto it = std::lower_bound(u2.begin(), u2.end(), r);
        std::size_t k = static_cast<std::size_t>(it - u2.begin());
        if (k < u2.size() && std::fabs(u2[k] - r) <= slack) return z2.values[k];
        if (k > 0 && std::fabs(u2[k - 1] - r) <= slack) return z2.values[k - 1];
        // cubic interpolation on the four surrounding nodes
        const std::size_t width = std::min<std::size_t>(4, u2.size());
        std::size_t s = k >= 2 ? k - 2 : 0;
        if (s + width > u2.size()) s = u2.size() - width;
        double v = 0.0;
        for (std::size_t a = s; a < s + width; ++a) {
            double l = 1.0;
            for (std::size_t b = s; b < s + width; ++b)
                if (b != a) l *= (r - u2[b]) / (u2[a] - u2[b]);
            v += l * z2.values[a];
        }
        return v;
    };

    const AbelOperator op(u1, 1.0, start1);
    const Eigen::MatrixXd& lc = op.corrections();
    const std::size_t ML = static_cast<std::size_t>(lc.cols());
    std::vector<double> rex = with_integers(start2);
    const std::size_t MR = rex.size();

    SampledFunction out{z1.grid, std::vector<double>(n, 0.0)};
    std::vector<double> gv(n), fe(n);
    for (std::size_t i = 1; i < n; ++i) {
        const double U = u1[i];
        for (std::size_t j = 0; j <= i; ++j)
            gv[j] = z1.values[j] * (aligned ? z2.values[i - j] : z2_at(U + u0 - u1[j], i));
        const bool left = i + 1 >= ML;
        const bool right = i + 1 >= ML + MR;
        auto rule = [&](const std::vector<double>& f) {
            double s = simd::dot(op.row(i), f.data(), i + 1);
            if (left)
                for (std::size_t k = 0; k < ML; ++k) s += lc(i, k) * f[k];
            return s;
        };
        double v = rule(gv);
        if (right) {
            const double XR = U - u1[i - MR + 1];
            Eigen::MatrixXd A(MR, MR);
            Eigen::VectorXd rhs(MR);
            for (std::size_t e = 0; e < MR; ++e) {
                for (std::size_t k = 0; k < MR; ++k) A(e, k) = std::pow((U - u1[i - k]) / XR, rex[e]);
                for (std::size_t j = 0; j <= i; ++j) fe[j] = std::pow(U - u1[j], rex[e]);
                const double exact = std::pow(U - u0, rex[e] + 1.0) / (rex[e] + 1.0);
                rhs(e) = (exact - rule(fe)) / std::pow(XR, rex[e]);
            }
            const Eigen::VectorXd s = A.fullPivLu().solve(rhs);
            for (std::size_t k = 0; k < MR; ++k) v += s(k) * gv[i - k];
        }
        out.values[i] = v;
    }
    return out;
}

}  // namespace fracdelay
