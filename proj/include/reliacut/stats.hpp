#pragma once

#include <vector>

namespace reliacut {

/// Inverse standard normal CDF (Acklam's rational approximation with a
/// Halley refinement step; good to full double precision for practical
/// purposes). p must be in (0, 1).
double normal_quantile(double p);

/// Regularized incomplete beta function I_x(a, b).
double regularized_incomplete_beta(double a, double b, double x);

/// Two-sided p-value of Student's t with nu degrees of freedom.
double student_t_two_sided(double t, double nu);

double mean(const std::vector<double>& xs);
double sample_variance(const std::vector<double>& xs);

/// Two-sided Welch unequal-variance t-test. Degenerate pairs with zero
/// variance on both sides return 1 when the means agree, 0 otherwise.
double welch_p_value(const std::vector<double>& a,
                     const std::vector<double>& b);

}  // namespace reliacut
