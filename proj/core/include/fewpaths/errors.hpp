#pragma once

#include <stdexcept>
#include <string>

namespace fewpaths {

// Base for every error raised by the library. Callers that only care about
// "something went wrong in fewpaths" can catch this.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Jacobi SVD did not converge within its sweep budget.
class NumericalFailure : public Error {
public:
  using Error::Error;
};

// A truncation threshold coincides with a singular value.
class ThresholdOnSingularValue : public Error {
public:
  using Error::Error;
};

// Every threshold redraw landed on a singular value.
class ThresholdUnresolvable : public Error {
public:
  using Error::Error;
};

// sigma_1 exceeds the caller-supplied spectral bound Z.
class SpectralBoundViolated : public Error {
public:
  using Error::Error;
};

// The rounded estimate is too far from an integer to be trusted.
class PromiseViolationSuspected : public Error {
public:
  using Error::Error;
};

class ConfigInvalid : public Error {
public:
  ConfigInvalid(std::string field, const std::string &message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string &field() const noexcept { return field_; }

private:
  std::string field_;
};

class IOFailure : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace fewpaths
