#pragma once

#include <span>
#include <utility>

namespace frailty {

double normal_cdf(double x);
double normal_quantile(double p);  // inverse standard normal CDF

// Student-t distribution (used for regression slope intervals and
// significance checks in the simulation harness).
double t_cdf(double t, double df);
double t_quantile(double p, double df);

double mean(std::span<const double> x);
double variance(std::span<const double> x);  // sample variance (n - 1)
double sd(std::span<const double> x);

// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(long successes, long n, double z = 1.959963984540054);

struct CorrelationTest {
  double rho = 0.0;
  double p_value = 1.0;
};
// Spearman rank correlation with a t-approximation p value (two-sided).
CorrelationTest spearman(std::span<const double> x, std::span<const double> y);

struct TwoSampleTest {
  double t = 0.0;
  double df = 0.0;
  double p_value = 1.0;
};
// Welch two-sample t test (two-sided).
TwoSampleTest welch_t_test(std::span<const double> a, std::span<const double> b);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  double slope_ci_lo = 0.0;
  double slope_ci_hi = 0.0;
};
// Ordinary least squares y = a + b x with a 95% t interval on the slope.
LineFit ols_line(std::span<const double> x, std::span<const double> y);

}  // namespace frailty
