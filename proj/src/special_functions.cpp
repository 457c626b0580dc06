#include "fracdelay/special_functions.hpp"

#include <mpfr.h>

#include <atomic>
#include <cmath>
#include <limits>
#include <string>

#include "fracdelay/simd.hpp"

namespace fracdelay {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogPi = 1.144729885849400174143427351353058712;
constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
constexpr double kGammaMaxArg = 171.62437695630272;
constexpr double kLogMax = 709.782712893384;

constexpr double kTermRel = 1e-16;
constexpr long kMaxTerms = 10000;
// Series are summed in double only when the largest term stays below e^3.
constexpr double kDoubleLogMaxTerm = 3.0;
// Batched Horner evaluation is allowed up to this log max term.
constexpr double kHornerLogMaxTerm = 2.0;

std::atomic<double> g_gamma_fault{0.0};

// Lanczos approximation, N = 13, g = 6.0246800407767295837 (double precision set).
constexpr double kLanczosG = 6.024680040776729583740234375;
constexpr double kLanczosNum[13] = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};
constexpr double kLanczosDenom[13] = {
    0.0, 39916800.0, 120543840.0, 150917976.0, 105258076.0, 45995730.0, 13339535.0,
    2637558.0, 357423.0, 32670.0, 1925.0, 66.0, 1.0,
};

double lanczos_sum(double z) {
    double s1, s2;
    if (z <= 1.0) {
        s1 = kLanczosNum[12];
        s2 = kLanczosDenom[12];
        for (int i = 11; i >= 0; --i) {
            s1 = s1 * z + kLanczosNum[i];
            s2 = s2 * z + kLanczosDenom[i];
        }
    } else {
        const double zi = 1.0 / z;
        s1 = kLanczosNum[0];
        s2 = kLanczosDenom[0];
        for (int i = 1; i < 13; ++i) {
            s1 = s1 * zi + kLanczosNum[i];
            s2 = s2 * zi + kLanczosDenom[i];
        }
    }
    return s1 / s2;
}

double gamma_core(double x) {
    if (x == std::floor(x) && x <= 171.0) {
        double r = 1.0;
        for (int k = 2; k < static_cast<int>(x); ++k) r *= k;
        return r;
    }
    if (x < 1.4901161193847656e-08) return 1.0 / x - kEulerGamma;
    double result = lanczos_sum(x);
    const double zgh = x + kLanczosG - 0.5;
    if (x * std::log(zgh) > kLogMax) {
        const double hp = std::pow(zgh, x / 2 - 0.25);
        result *= hp / std::exp(zgh);
        result *= hp;
    } else {
        result *= std::pow(zgh, x - 0.5) / std::exp(zgh);
    }
    return result;
}

double fault_factor(double x) {
    const double f = g_gamma_fault.load(std::memory_order_relaxed);
    return f == 0.0 ? 1.0 : 1.0 + f * x;
}

void check_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(what) + " must be positive and finite");
}

// Neumaier compensated accumulator.
struct Accumulator {
    double sum = 0.0;
    double comp = 0.0;
    void add(double t) {
        const double s = sum + t;
        if (std::fabs(sum) >= std::fabs(t))
            comp += (sum - s) + t;
        else
            comp += (t - s) + sum;
        sum = s;
    }
    double value() const { return sum + comp; }
};

double log_term(double p, double q, double lx, double k) { return k * lx - log_gamma(p * k + q); }

// log of the largest |theta|^k / Gamma(pk+q).
double log_max_term(double p, double q, double theta) {
    const double lx = std::log(std::fabs(theta));
    double best = -log_gamma(q);
    const double X = std::exp(lx / p);
    if (!std::isfinite(X)) return std::numeric_limits<double>::infinity();
    const double kstar = std::floor((X + 0.5 - q) / p);
    for (double d : {-1.0, 0.0, 1.0, 2.0}) {
        const double k = kstar + d;
        if (k < 1.0) continue;
        best = std::max(best, log_term(p, q, lx, k));
    }
    return best;
}

double series_double(double p, double q, double theta) {
    const double ax = std::fabs(theta);
    const double lx = ax > 0.0 ? std::log(ax) : -std::numeric_limits<double>::infinity();
    Accumulator acc;
    double prev = std::numeric_limits<double>::infinity();
    for (long k = 0; k <= kMaxTerms; ++k) {
        const double x = p * static_cast<double>(k) + q;
        double mag;
        if (k == 0) {
            mag = 1.0 / gamma(x);
        } else if (ax == 0.0) {
            mag = 0.0;
        } else if (x <= 170.0 && static_cast<double>(k) * lx < 690.0) {
            mag = std::pow(ax, static_cast<double>(k)) / gamma(x);
        } else {
            mag = std::exp(static_cast<double>(k) * lx - log_gamma(x));
        }
        const double t = (theta < 0.0 && (k & 1)) ? -mag : mag;
        acc.add(t);
        const double s = std::fabs(acc.value());
        if (k > 0 && mag < prev && (mag < kTermRel * s || mag == 0.0)) return acc.value();
        prev = mag;
    }
    throw AccuracyError("Mittag-Leffler series did not terminate within the term cap");
}

// -sum_{k>=1} theta^-k / Gamma(q - p k), theta < 0, 0 < p < 1. Returns false
// when the divergent tail prevents reaching double precision.
bool asymptotic(double p, double q, double theta, double& out) {
    const double lx = std::log(-theta);
    Accumulator acc;
    double prev_env = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 400; ++k) {
        const double x = q - p * k;
        double term;
        // env bounds |theta^-k / Gamma(x)| up to a constant and is unimodal in k
        double env;
        if (x > 0.0) {
            term = std::exp(-k * lx - log_gamma(x));
            env = 1.2 * std::exp(-k * lx);
        } else {
            term = sinpi(x) * std::exp(-k * lx + log_gamma(1.0 - x) - kLogPi);
            env = std::exp(-k * lx + log_gamma(2.0 - x));
        }
        // -(-1)^k |theta|^-k rgamma(x)
        if ((k & 1) == 0) term = -term;
        acc.add(term);
        const double s = std::fabs(acc.value());
        if (s > 0.0 && env <= 5e-17 * s) {
            out = acc.value();
            return true;
        }
        if (env > prev_env) return false;
        prev_env = env;
    }
    return false;
}

struct MpfrVar {
    mpfr_t v;
    explicit MpfrVar(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~MpfrVar() { mpfr_clear(v); }
    MpfrVar(const MpfrVar&) = delete;
    MpfrVar& operator=(const MpfrVar&) = delete;
};

double series_mpfr(double p, double q, double theta, double log_max) {
    const auto prec = static_cast<mpfr_prec_t>(96 + std::ceil(std::max(log_max, 0.0) / std::log(2.0)));
    MpfrVar vp(prec), vq(prec), th(prec), pw(prec), x(prec), g(prec), t(prec), s(prec);
    mpfr_set_d(vp.v, p, MPFR_RNDN);
    mpfr_set_d(vq.v, q, MPFR_RNDN);
    mpfr_set_d(th.v, theta, MPFR_RNDN);
    mpfr_set_ui(pw.v, 1, MPFR_RNDN);
    mpfr_set_ui(s.v, 0, MPFR_RNDN);
    const double X = std::pow(std::fabs(theta), 1.0 / p);
    const double kpeak = (X + 0.5 - q) / p;
    for (long k = 0; k <= kMaxTerms; ++k) {
        mpfr_mul_ui(x.v, vp.v, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_add(x.v, x.v, vq.v, MPFR_RNDN);
        mpfr_gamma(g.v, x.v, MPFR_RNDN);
        mpfr_mul_d(g.v, g.v, fault_factor(p * static_cast<double>(k) + q), MPFR_RNDN);
        mpfr_div(t.v, pw.v, g.v, MPFR_RNDN);
        mpfr_add(s.v, s.v, t.v, MPFR_RNDN);
        const double td = std::fabs(mpfr_get_d(t.v, MPFR_RNDN));
        const double sd = std::fabs(mpfr_get_d(s.v, MPFR_RNDN));
        if (static_cast<double>(k) > kpeak && (td < 1e-30 * sd || td == 0.0)) return mpfr_get_d(s.v, MPFR_RNDN);
        mpfr_mul(pw.v, pw.v, th.v, MPFR_RNDN);
    }
    throw AccuracyError("extended-precision Mittag-Leffler series did not terminate within the term cap");
}

double evaluate(double p, double q, double theta, MlRoute* route) {
    check_positive(p, "Mittag-Leffler order p");
    check_positive(q, "Mittag-Leffler parameter q");
    if (std::isnan(theta) || std::isinf(theta)) throw DomainError("Mittag-Leffler argument must be finite");
    if (theta == 0.0) {
        if (route) *route = MlRoute::zero;
        return series_double(p, q, theta);
    }
    const double X = std::pow(std::fabs(theta), 1.0 / p);
    if (theta > 0.0) {
        if (X > kMlArgumentCap) throw OverflowError("Mittag-Leffler argument beyond the overflow cap");
        if (route) *route = MlRoute::series;
        const double v = series_double(p, q, theta);
        if (!std::isfinite(v)) throw OverflowError("Mittag-Leffler value overflows");
        return v;
    }
    const double lmax = log_max_term(p, q, theta);
    if (lmax <= kDoubleLogMaxTerm) {
        if (route) *route = MlRoute::series;
        return series_double(p, q, theta);
    }
    if (p < 1.0) {
        double v;
        if (asymptotic(p, q, theta, v)) {
            if (route) *route = MlRoute::asymptotic;
            return v;
        }
    }
    if (X > kMlArgumentCap)
        throw AccuracyError("Mittag-Leffler argument beyond the certified evaluation cap");
    if (route) *route = MlRoute::extended_series;
    return series_mpfr(p, q, theta, lmax);
}

}  // namespace

double gamma(double x) {
    if (std::isnan(x) || x <= 0.0) throw DomainError("gamma requires x > 0");
    if (x > kGammaMaxArg) throw OverflowError("gamma overflows for x > 171.62");
    return gamma_core(x) * fault_factor(x);
}

double log_gamma(double x) {
    if (std::isnan(x) || x <= 0.0) throw DomainError("log_gamma requires x > 0");
    if (x < 100.0) return std::log(gamma(x));
    const double zgh = x + kLanczosG - 0.5;
    return std::log(lanczos_sum(x)) + (x - 0.5) * std::log(zgh) - zgh + std::log(fault_factor(x));
}

double sinpi(double x) {
    if (x < 0.0) return -sinpi(-x);
    const double r = std::fmod(x, 2.0);
    if (r == 0.0 || r == 1.0) return 0.0;
    if (r <= 0.25) return std::sin(kPi * r);
    if (r <= 0.75) return std::cos(kPi * (r - 0.5));
    if (r <= 1.25) return std::sin(kPi * (1.0 - r));
    if (r <= 1.75) return -std::cos(kPi * (r - 1.5));
    return std::sin(kPi * (r - 2.0));
}

double rgamma(double x) {
    if (std::isnan(x) || std::isinf(x)) throw DomainError("rgamma requires a finite argument");
    if (x > 0.0) {
        if (x > kGammaMaxArg) return std::exp(-log_gamma(x));
        return 1.0 / gamma(x);
    }
    if (x == std::floor(x)) return 0.0;
    const double s = sinpi(x);
    const double y = 1.0 - x;
    if (y > kGammaMaxArg) {
        const double mag = std::exp(std::log(std::fabs(s)) + log_gamma(y) - kLogPi);
        return s < 0.0 ? -mag : mag;
    }
    return s * gamma(y) / kPi;
}

double ml2(double p, double q, double theta) { return evaluate(p, q, theta, nullptr); }

double ml1(double p, double theta) { return ml2(p, 1.0, theta); }

double ml2(const MlParams& params, double theta) { return ml2(params.p, params.q, theta); }

MlRoute ml2_route(double p, double q, double theta) {
    MlRoute r = MlRoute::series;
    evaluate(p, q, theta, &r);
    return r;
}

struct MlExtendedTable {
    mpfr_prec_t prec;
    std::vector<__mpfr_struct> coef;
    double p;
    double q;

    MlExtendedTable(double p_, double q_, double theta_max) : p(p_), q(q_) {
        const double lmax = log_max_term(p, q, theta_max);
        const double bits = 96 + std::ceil(std::max(lmax, 0.0) / std::log(2.0));
        prec = static_cast<mpfr_prec_t>(bits);
        const double lx = std::log(theta_max);
        const double X = std::pow(theta_max, 1.0 / p);
        const double kpeak = (X + 0.5 - q) / p;
        // keep terms down to 2^-bits relative to the largest one
        const double floor_log = lmax - (bits + 8) * std::log(2.0);
        MpfrVar vp(prec), x(prec);
        mpfr_set_d(vp.v, p, MPFR_RNDN);
        for (long k = 0; k <= kMaxTerms; ++k) {
            if (static_cast<double>(k) > kpeak && log_term(p, q, lx, static_cast<double>(k)) < floor_log) return;
            coef.emplace_back();
            mpfr_ptr c = &coef.back();
            mpfr_init2(c, prec);
            mpfr_mul_ui(x.v, vp.v, static_cast<unsigned long>(k), MPFR_RNDN);
            mpfr_add_d(x.v, x.v, q, MPFR_RNDN);
            mpfr_gamma(c, x.v, MPFR_RNDN);
            mpfr_mul_d(c, c, fault_factor(p * static_cast<double>(k) + q), MPFR_RNDN);
            mpfr_ui_div(c, 1, c, MPFR_RNDN);
        }
        throw AccuracyError("extended-precision coefficient table exceeds the term cap");
    }
    ~MlExtendedTable() {
        for (auto& c : coef) mpfr_clear(&c);
    }
    MlExtendedTable(const MlExtendedTable&) = delete;
    MlExtendedTable& operator=(const MlExtendedTable&) = delete;

    double eval(double theta) const {
        MpfrVar th(prec), pw(prec), t(prec), s(prec);
        mpfr_set_d(th.v, theta, MPFR_RNDN);
        mpfr_set_ui(pw.v, 1, MPFR_RNDN);
        mpfr_set_ui(s.v, 0, MPFR_RNDN);
        for (const auto& c : coef) {
            mpfr_mul(t.v, pw.v, &c, MPFR_RNDN);
            mpfr_add(s.v, s.v, t.v, MPFR_RNDN);
            mpfr_mul(pw.v, pw.v, th.v, MPFR_RNDN);
        }
        return mpfr_get_d(s.v, MPFR_RNDN);
    }
};

MlBatch::MlBatch(double p, double q, double theta_max) : p_(p), q_(q), theta_max_(std::fabs(theta_max)) {
    check_positive(p, "Mittag-Leffler order p");
    check_positive(q, "Mittag-Leffler parameter q");
    if (!std::isfinite(theta_max_)) throw DomainError("batch range must be finite");
    const double lmax = theta_max_ > 0.0 ? log_max_term(p, q, theta_max_) : -log_gamma(q);
    if (lmax > kHornerLogMaxTerm) {
        const double X = std::pow(theta_max_, 1.0 / p);
        if (X <= kMlArgumentCap) ext_ = std::make_shared<const MlExtendedTable>(p, q, theta_max_);
        return;
    }
    double prev = std::numeric_limits<double>::infinity();
    for (long k = 0; k < 4000; ++k) {
        const double c = rgamma(p * static_cast<double>(k) + q);
        coef_.push_back(c);
        if (theta_max_ == 0.0) {
            horner_ = true;
            return;
        }
        const double mag = k == 0 ? c : c * std::pow(theta_max_, static_cast<double>(k));
        if (k > 0 && mag < prev && mag < 1e-18) {
            horner_ = true;
            return;
        }
        prev = mag;
    }
    coef_.clear();
}

double MlBatch::operator()(double theta) const {
    double out;
    eval(&theta, &out, 1);
    return out;
}

void MlBatch::eval(const double* theta, double* out, std::size_t n) const {
    bool in_range = horner_;
    for (std::size_t i = 0; in_range && i < n; ++i) in_range = std::fabs(theta[i]) <= theta_max_;
    if (in_range) {
        simd::horner(coef_.data(), coef_.size(), theta, out, n);
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double t = theta[i];
        if (!ext_ || t >= 0.0 || std::fabs(t) > theta_max_) {
            out[i] = ml2(p_, q_, t);
            continue;
        }
        const double lmax = log_max_term(p_, q_, t);
        if (lmax <= kDoubleLogMaxTerm) {
            out[i] = series_double(p_, q_, t);
            continue;
        }
        double v;
        if (p_ < 1.0 && asymptotic(p_, q_, t, v)) {
            out[i] = v;
            continue;
        }
        out[i] = ext_->eval(t);
    }
}

std::vector<double> MlBatch::eval(const std::vector<double>& theta) const {
    std::vector<double> out(theta.size());
    eval(theta.data(), out.data(), theta.size());
    return out;
}

namespace testing {
void set_gamma_fault(double rel) { g_gamma_fault.store(rel, std::memory_order_relaxed); }
double gamma_fault() { return g_gamma_fault.load(std::memory_order_relaxed); }
}  // namespace testing

}  // namespace fracdelay
