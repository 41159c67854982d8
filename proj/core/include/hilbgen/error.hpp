#pragma once

#include <stdexcept>
#include <string>

namespace hilbgen {

/// Arithmetic between coefficient kinds that were never promoted to a common kind.
class KindError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is well formed but the requested computation has no exact answer
/// (singular pairing, non-integral exponent, inconsistent system, ...).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hilbgen
