#ifndef HSMARGIN_ERRORS_HPP_
#define HSMARGIN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hsm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (angle range,
// invalid margin parameters, nonpositive scale, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Feature or weight row with norm below the degeneracy threshold.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Analytic derivative requested within tolerance of a non-differentiable
// point while exact (non-detached) gradients are in effect.
class KinkError : public Error {
 public:
  using Error::Error;
};

// Boundary equation has no root in the searched interval.
class NoRootError : public Error {
 public:
  using Error::Error;
};

// Rejection sampling exceeded its attempt budget.
class SamplingError : public Error {
 public:
  using Error::Error;
};

// Training loss became non-finite.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Bad run configuration (unknown key, unparsable value, missing input).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File could not be read, written or parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

// Index out of range for a dataset, head or embedding set.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Pair protocol or gallery/probe set unusable (no positives, empty set, ...).
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace hsm

#endif  // HSMARGIN_ERRORS_HPP_
