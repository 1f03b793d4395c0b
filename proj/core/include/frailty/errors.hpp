#pragma once

#include <stdexcept>
#include <string>

namespace frailty {

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// solve_root: f(lo) and f(hi) have the same sign.
struct NoSignChange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MaxIterations : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// numeric_gradient hit a non-finite function value at a probe point.
struct NonFiniteValue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Both moment integrals underflowed; caller should rescale.
struct NumericalUnderflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Censoring-rate equation has no solution on the search bracket.
struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularJacobian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fewer bootstrap replicates converged than required.
struct TooFewConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace frailty
