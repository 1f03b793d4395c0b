#pragma once

#include <cstdint>
#include <random>

namespace frailty {

// 64-bit finalizer from the splitmix64 generator. Used to derive independent
// per-replicate and per-repetition seeds from a master seed, so parallel
// schedules produce identical streams.
std::uint64_t splitmix64(std::uint64_t x);

// Seed for sub-task `index` of a run seeded with `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Random variate generator backed by std::mt19937_64. The engine is fully
// specified by the standard; the samplers below are implemented here rather
// than with std::*_distribution so that streams are identical across standard
// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on the open interval (0, 1).
  double uniform();
  double uniform(double a, double b);
  // Uniform on integers {a, ..., b}.
  long uniform_int(long a, long b);

  double normal();  // standard normal, Box-Muller
  double normal(double mean, double sd);
  double exponential();  // mean 1
  double gamma(double shape, double scale);       // Marsaglia-Tsang
  double inverse_gaussian(double mu, double lambda);  // Michael et al. transformation
  long poisson(double lambda);

 private:
  std::mt19937_64 engine_;
};

}  // namespace frailty
