#pragma once

#include <Eigen/Core>
#include <functional>
#include <limits>

namespace frailty {

// Convergence controls for one-dimensional adaptive quadrature. The defaults
// mirror the estimator's permissive inner-loop settings (abs 0, rel 1,
// max 1000 evaluations); tests and generators pass tighter values.
struct QuadratureControl {
  double abs_tol = 0.0;
  double rel_tol = 1.0;
  int max_evals = 1000;

  static QuadratureControl tight() { return {1e-10, 1e-10, 200000}; }
};

struct RootBracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct IntegralResult {
  double value = 0.0;
  double abs_err = 0.0;
  int evals = 0;
  // False when max_evals was hit before the error target; the best estimate
  // is still returned, the caller decides whether to care.
  bool converged = true;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Brent's method on a sign-changing bracket. Throws NoSignChange if
// f(lo) * f(hi) > 0 and MaxIterations if the bracket fails to shrink.
double solve_root(const std::function<double(double)>& f, RootBracket bracket,
                  double tol = 1e-12, int max_iter = 200);

// Globally adaptive Gauss-Kronrod (7,15) integration of f over (a, b).
// b may be +infinity, in which case the tail is folded onto (0, 1) by the
// substitution x = a + t / (1 - t), dx = dt / (1 - t)^2.
IntegralResult integrate(const std::function<double(double)>& f, double a, double b,
                         const QuadratureControl& ctrl = {});

// Central-difference Jacobian of F at x, one column per input coordinate.
// step <= 0 selects cbrt(machine epsilon) * max(1, |x_j|) per coordinate.
// Throws NonFiniteValue if F is non-finite at a probe point.
Eigen::MatrixXd numeric_jacobian(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& F,
    const Eigen::VectorXd& x, double step = 0.0);

// Scalar convenience wrapper: d/dx F at x.
double numeric_derivative(const std::function<double(double)>& F, double x,
                          double step = 0.0);

// Special functions used by the frailty distributions and cluster-size laws.
double log_gamma_fn(double x);  // log Gamma(x), x > 0
double digamma(double x);       // psi(x), x > 0
// Truncated Riemann zeta sum: sum_{j=1}^{terms} j^{-s}.
double truncated_zeta_sum(double s, long terms);

}  // namespace frailty
