#pragma once

#include <span>
#include <vector>

namespace commeval {

double mean(std::span<const double> xs);

// Unbiased (n-1) sample variance; 0 for fewer than two observations.
double sample_variance(std::span<const double> xs);

// Regularized incomplete beta function I_x(a, b), continued-fraction
// evaluation, relative error around 1e-14.
double regularized_incomplete_beta(double a, double b, double x);

// Two-sided tail probability of Student's t with nu degrees of freedom.
double student_t_two_sided_p(double t, double nu);

// Welch two-sample t-test (unequal variances), two-sided p-value.
// Both samples zero-variance: 1 when the means agree, 0 otherwise.
double welch_p_value(std::span<const double> xs, std::span<const double> ys);

// Paired t-test on per-index differences; sample sizes must match.
double paired_p_value(std::span<const double> xs, std::span<const double> ys);

// Holm step-down multiplicity adjustment; adjusted p-values in input order.
std::vector<double> holm_adjust(std::span<const double> p_values);

} // namespace commeval
