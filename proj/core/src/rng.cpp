#include "frailty/rng.hpp"

#include <cmath>

#include "frailty/errors.hpp"

namespace frailty {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + kGolden * (index + 1));
}

double Rng::uniform() {
  // 53-bit mantissa, offset by half an ulp so 0 and 1 are excluded.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform(); }

long Rng::uniform_int(long a, long b) {
  if (b < a) throw InvalidParameter("uniform_int: b < a");
  const auto span = static_cast<std::uint64_t>(b - a) + 1;
  // Rejection to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return a + static_cast<long>(r % span);
}

double Rng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double Rng::normal(double mean, double sd) { return mean + sd * normal(); }

double Rng::exponential() { return -std::log(uniform()); }

double Rng::gamma(double shape, double scale) {
  if (shape <= 0.0 || scale <= 0.0) throw InvalidParameter("gamma: shape and scale must be > 0");
  if (shape < 1.0) {
    // Boost to shape+1 and scale back.
    const double u = uniform();
    return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
  }
}

double Rng::inverse_gaussian(double mu, double lambda) {
  if (mu <= 0.0 || lambda <= 0.0) throw InvalidParameter("inverse_gaussian: mu and lambda must be > 0");
  const double nu = normal();
  const double y = nu * nu;
  const double x = mu + mu * mu * y / (2.0 * lambda) -
                   mu / (2.0 * lambda) * std::sqrt(4.0 * mu * lambda * y + mu * mu * y * y);
  if (uniform() <= mu / (mu + x)) return x;
  return mu * mu / x;
}

long Rng::poisson(double lambda) {
  if (lambda < 0.0) throw InvalidParameter("poisson: lambda must be >= 0");
  if (lambda == 0.0) return 0;
  // Additivity keeps the sequential search in double range for large means.
  if (lambda > 500.0) return poisson(lambda / 2.0) + poisson(lambda / 2.0);
  const double p0 = std::exp(-lambda);
  double p = p0;
  double cum = p0;
  const double u = uniform();
  long k = 0;
  while (u > cum) {
    ++k;
    p *= lambda / static_cast<double>(k);
    cum += p;
    if (k > 100000) break;  // unreachable for lambda <= 500
  }
  return k;
}

}  // namespace frailty
