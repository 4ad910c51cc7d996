#pragma once

#include <stdexcept>
#include <string>

namespace quanthelly {

// Base for all library failures. Each subclass corresponds to one failure
// family so callers (and the CLI exit-code mapping) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Operation not available for this representation or dimension.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A precision, pool, iteration or enumeration budget was exhausted.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class Unbounded : public Error {
 public:
  using Error::Error;
};

// A hypothesis required by an operation does not hold on the input.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

// A post-hoc verification of a constructed object failed.
class VerificationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace quanthelly
