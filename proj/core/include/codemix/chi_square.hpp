#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace codemix {

struct ChiSquareResult {
    double statistic = 0.0;
    int df = 0;
    double p_value = 1.0;
};

/// Pearson goodness-of-fit of observed counts against expected proportions.
/// The proportions are rescaled to sum to 1 first. Throws DimensionMismatch
/// (sizes differ or fewer than two categories), ZeroExpected (a proportion
/// <= 0) and EmptyInput (no observations).
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> expected_props);

/// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// Upper tail of the chi-square distribution with k degrees of freedom.
/// Throws DomainError for negative or NaN x, or k < 1.
double chi2_sf(double x, int k);

/// Human-readable p-value; anything below 2.2e-16 prints as "< 2.2e-16".
std::string format_p_value(double p);

}  // namespace codemix
