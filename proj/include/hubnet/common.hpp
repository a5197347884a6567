#pragma once

#include <stdexcept>
#include <string>

namespace hubnet {

// Precondition violations: bad dimensions, non-finite input, invalid parameters.
class InvalidInput : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure broke down (factorization failure, eigensolver
// non-convergence, singular matrix where a definite one was required).
class NumericalFailure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Synthetic-graph generation could not realize the requested structure.
class GenerationFailure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Magnitude below which an estimated entry counts as zero when reading off
// edges, cardinalities, and hub columns.
inline constexpr double kZeroTol = 1e-5;

}  // namespace hubnet
