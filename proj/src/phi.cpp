#include "fracdelay/phi.hpp"

#include <cmath>
#include <sstream>

#include "fracdelay/errors.hpp"

namespace fracdelay {

PhiFunction PhiFunction::identity() { return PhiFunction(PhiKind::identity, 1.0); }
PhiFunction PhiFunction::logarithmic() { return PhiFunction(PhiKind::logarithmic, 1.0); }
PhiFunction PhiFunction::exponential() { return PhiFunction(PhiKind::exponential, 1.0); }

PhiFunction PhiFunction::power(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("power Phi requires exponent > 0");
    return PhiFunction(PhiKind::power, rho);
}

PhiFunction PhiFunction::custom(Fn eval, Fn deriv, Fn inverse) {
    if (!eval || !deriv) throw DomainError("custom Phi needs eval and deriv");
    PhiFunction f(PhiKind::custom, 1.0);
    f.eval_ = std::move(eval);
    f.deriv_ = std::move(deriv);
    f.inverse_ = std::move(inverse);
    return f;
}

std::string PhiFunction::name() const {
    switch (kind_) {
        case PhiKind::identity: return "identity";
        case PhiKind::logarithmic: return "logarithmic";
        case PhiKind::exponential: return "exponential";
        case PhiKind::power: {
            std::ostringstream os;
            os.precision(17);
            os << "power(" << rho_ << ")";
            return os.str();
        }
        case PhiKind::custom: return "custom";
    }
    return "custom";
}

double PhiFunction::operator()(double ell) const {
    switch (kind_) {
        case PhiKind::identity: return ell;
        case PhiKind::logarithmic: return std::log(ell);
        case PhiKind::exponential: return std::exp(ell);
        case PhiKind::power: return ell < 0.0 ? -std::pow(-ell, rho_) : std::pow(ell, rho_);
        case PhiKind::custom: return eval_(ell);
    }
    return ell;
}

double PhiFunction::deriv(double ell) const {
    switch (kind_) {
        case PhiKind::identity: return 1.0;
        case PhiKind::logarithmic: return 1.0 / ell;
        case PhiKind::exponential: return std::exp(ell);
        case PhiKind::power: return rho_ * std::pow(std::fabs(ell), rho_ - 1.0);
        case PhiKind::custom: return deriv_(ell);
    }
    return 1.0;
}

bool PhiFunction::has_inverse() const noexcept { return kind_ != PhiKind::custom || static_cast<bool>(inverse_); }

double PhiFunction::inverse(double u) const {
    switch (kind_) {
        case PhiKind::identity: return u;
        case PhiKind::logarithmic: return std::exp(u);
        case PhiKind::exponential:
            if (!(u > 0.0)) throw DomainError("exponential Phi inverse needs u > 0");
            return std::log(u);
        case PhiKind::power: return u < 0.0 ? -std::pow(-u, 1.0 / rho_) : std::pow(u, 1.0 / rho_);
        case PhiKind::custom:
            if (!inverse_) throw DomainError("custom Phi has no inverse");
            return inverse_(u);
    }
    return u;
}

std::vector<double> PhiFunction::transform(const std::vector<double>& ell) const {
    std::vector<double> u(ell.size());
    for (std::size_t i = 0; i < ell.size(); ++i) u[i] = (*this)(ell[i]);
    return u;
}

void SampledFunction::validate() const {
    if (grid.size() != values.size()) throw DomainError("grid and values differ in length");
    if (grid.size() < 2) throw DomainError("a sampled function needs at least two nodes");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw DomainError("grid must be strictly increasing");
}

SampledFunction sample(const std::vector<double>& grid, const std::function<double(double)>& f) {
    SampledFunction s{grid, std::vector<double>(grid.size())};
    for (std::size_t i = 0; i < grid.size(); ++i) s.values[i] = f(grid[i]);
    return s;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    if (n < 2 || !(hi > lo)) throw DomainError("uniform grid needs n >= 2 and hi > lo");
    std::vector<double> g(n);
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) g[i] = lo + h * static_cast<double>(i);
    g.back() = hi;
    return g;
}

std::optional<PhiViolation> validate_phi(const PhiFunction& phi, double lo, double hi, std::size_t n) {
    if (!(hi > lo) || n < 2) throw DomainError("validate_phi needs lo < hi and n >= 2");
    if (phi.kind() == PhiKind::logarithmic && !(lo > 0.0))
        return PhiViolation{0, lo, "logarithmic Phi requires a positive domain"};
    double prev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ell = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        const double d = phi.deriv(ell);
        if (!std::isfinite(d)) return PhiViolation{i, ell, "Phi' is not finite"};
        if (!(d > 0.0)) return PhiViolation{i, ell, "Phi' is not positive"};
        const double v = phi(ell);
        if (!std::isfinite(v)) return PhiViolation{i, ell, "Phi is not finite"};
        if (i > 0 && !(v > prev)) return PhiViolation{i, ell, "Phi is not strictly increasing"};
        prev = v;
    }
    return std::nullopt;
}

}  // namespace fracdelay
