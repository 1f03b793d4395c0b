#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frailty/numerics.hpp"
#include "frailty/rng.hpp"

namespace frailty {

enum class FrailtyKind {
  Gamma,
  Pvf,
  LogNormal,
  InverseGaussian,
  PositiveStable,  // sampling only; estimation entry points reject it
  None,            // omega == 1 everywhere
};

std::string to_string(FrailtyKind kind);
FrailtyKind frailty_kind_from_string(const std::string& name);

// Frailty distribution tag plus its parameter. Parameters below the
// degenerate guard are clamped to the omega == 1 limit at construction.
struct FrailtySpec {
  FrailtyKind kind = FrailtyKind::None;
  double theta = 0.0;
  bool clamped_degenerate = false;

  static FrailtySpec gamma(double theta);
  static FrailtySpec pvf(double theta);
  static FrailtySpec log_normal(double theta);
  static FrailtySpec inverse_gaussian(double theta);
  static FrailtySpec positive_stable(double theta);
  static FrailtySpec none();
  static FrailtySpec make(FrailtyKind kind, double theta);

  bool degenerate() const { return kind == FrailtyKind::None || clamped_degenerate; }
  // Estimation supports gamma, PVF, log-normal and inverse Gaussian; None is
  // allowed as the no-frailty reference.
  bool estimable() const;
  bool needs_quadrature() const {
    return kind == FrailtyKind::LogNormal || kind == FrailtyKind::InverseGaussian;
  }
  // Variance of the frailty variates under this parameterization.
  double frailty_variance() const;
};

// Laplace transform query: derivative order m and argument s = H_i(t).
struct LtQuery {
  int m = 0;
  double s = 0.0;
};

// Frailty density f(omega; theta). PVF uses the tilted positive-stable
// series (test oracle only in production terms); positive stable itself has
// no closed density here and is rejected.
double density(const FrailtySpec& spec, double omega);

// d f(omega; theta) / d theta for the log-normal and inverse Gaussian.
double density_dtheta(const FrailtySpec& spec, double omega);

// m-th derivative of the Laplace transform, signed: sign is (-1)^m.
double lt(const FrailtySpec& spec, const LtQuery& q, const QuadratureControl& ctrl = {});

// d L^{(m)}(s) / d theta.
double lt_dtheta(const FrailtySpec& spec, const LtQuery& q, const QuadratureControl& ctrl = {});

// log of the nonnegative moment integral phi_k = (-1)^k L^{(k)}(s)
//   = int_0^inf omega^k exp(-s omega) f(omega) domega.
// This is the workhorse for the likelihood, the psi ratio and the scores.
double log_phi(const FrailtySpec& spec, int k, double s, const QuadratureControl& ctrl = {});

// d/dtheta log phi_m(s); equals lt_dtheta / lt with both signs cancelled.
double dlog_phi_dtheta(const FrailtySpec& spec, int m, double s,
                       const QuadratureControl& ctrl = {});

// psi = phi_{N+1}(H) / phi_N(H), the conditional frailty mean given N events
// and cumulative exposure H. Positive; equals 1 for the no-frailty model.
double psi(const FrailtySpec& spec, int n_events, double H, const QuadratureControl& ctrl = {});

// Kendall's tau: kappa = 4 int_0^inf s L(s) L''(s) ds - 1.
double kendall_tau(const FrailtySpec& spec, const QuadratureControl& ctrl = QuadratureControl::tight());

// n i.i.d. frailty variates. Deterministic given the generator state.
std::vector<double> sample(const FrailtySpec& spec, std::size_t n, Rng& rng);

}  // namespace frailty
