#ifndef EIRQ_ERRORS_HPP
#define EIRQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eirq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iteration exponent k = 0, or |k| above the iteration bound.
class InvalidExponent : public Error {
 public:
  using Error::Error;
};

/// Element outside the carrier (wrong dimension, label range, non-finite).
class InvalidElement : public Error {
 public:
  using Error::Error;
};

/// A carrier or algebra failed its construction checks.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Operation not available on this carrier (e.g. a limit on a non-uniform irq).
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace eirq

#endif
