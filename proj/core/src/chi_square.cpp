#include "codemix/chi_square.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "codemix/error.hpp"

namespace codemix {

namespace {

constexpr int kMaxIterations = 10000;
constexpr double kEpsilon = 1e-16;
constexpr double kTiny = 1e-300;

void check_gamma_args(double a, double x) {
    if (!(a > 0.0) || std::isnan(x) || x < 0.0) {
        throw Error(ErrorCode::DomainError, "incomplete gamma needs a > 0 and x >= 0");
    }
}

// log(x^a e^-x / Gamma(a))
double log_prefactor(double a, double x) {
    return a * std::log(x) - x - std::lgamma(a);
}

// P(a, x) by the power series; converges quickly for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int n = 0; n < kMaxIterations; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEpsilon) break;
    }
    return sum * std::exp(log_prefactor(a, x));
}

// Q(a, x) by the Legendre continued fraction (modified Lentz); for x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIterations; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEpsilon) break;
    }
    return std::exp(log_prefactor(a, x)) * h;
}

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace

double regularized_gamma_p(double a, double x) {
    check_gamma_args(a, x);
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    if (x < a + 1.0) return clamp01(gamma_p_series(a, x));
    return clamp01(1.0 - gamma_q_continued_fraction(a, x));
}

double regularized_gamma_q(double a, double x) {
    check_gamma_args(a, x);
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    if (x < a + 1.0) return clamp01(1.0 - gamma_p_series(a, x));
    return clamp01(gamma_q_continued_fraction(a, x));
}

double chi2_sf(double x, int k) {
    if (std::isnan(x) || x < 0.0) {
        throw Error(ErrorCode::DomainError, "chi-square statistic must be non-negative");
    }
    if (k < 1) throw Error(ErrorCode::DomainError, "degrees of freedom must be at least 1");
    return regularized_gamma_q(0.5 * k, 0.5 * x);
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> expected_props) {
    if (observed.size() != expected_props.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(observed.size()) + " observed counts but " +
                        std::to_string(expected_props.size()) + " expected proportions");
    }
    if (observed.size() < 2) {
        throw Error(ErrorCode::DimensionMismatch, "goodness-of-fit needs at least two categories");
    }

    double prop_sum = 0.0;
    for (double p : expected_props) {
        if (!(p > 0.0) || !std::isfinite(p)) {
            throw Error(ErrorCode::ZeroExpected, "expected proportions must be positive and finite");
        }
        prop_sum += p;
    }
    std::uint64_t n = 0;
    for (auto o : observed) n += o;
    if (n == 0) throw Error(ErrorCode::EmptyInput, "observed counts sum to zero");

    ChiSquareResult r;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double expected = static_cast<double>(n) * (expected_props[i] / prop_sum);
        const double diff = static_cast<double>(observed[i]) - expected;
        r.statistic += diff * diff / expected;
    }
    r.df = static_cast<int>(observed.size()) - 1;
    r.p_value = chi2_sf(r.statistic, r.df);
    return r;
}

std::string format_p_value(double p) {
    if (p < 2.2e-16) return "< 2.2e-16";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", p);
    return buf;
}

}  // namespace codemix
