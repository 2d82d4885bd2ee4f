#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gentrans {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain an operation is defined on.
class ParameterDomainError : public Error {
 public:
  using Error::Error;
};

/// A point argument lies outside the open interval (-1, 1) or a stencil leaves it.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A function sample was NaN or infinite.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// Two expansions or an expansion and an operator live in different Jacobi bases.
class BasisMismatchError : public Error {
 public:
  using Error::Error;
};

/// A polynomial construct produced energy above its proven degree bound.
class DegreeViolationError : public Error {
 public:
  using Error::Error;
};

/// phi vanished where the summation conditions divide by it.
class DegeneratePhiError : public Error {
 public:
  using Error::Error;
};

/// Bad experiment configuration (maps to exit code 64 in the CLI).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver ran out of iterations. Carries the last iterate
/// (coefficients in the solver's output basis) and its achieved error.
class IterationLimitError : public Error {
 public:
  IterationLimitError(const std::string& what, std::vector<double> last_coeffs, double last_error)
      : Error(what), last_coeffs_(std::move(last_coeffs)), last_error_(last_error) {}

  const std::vector<double>& last_coeffs() const { return last_coeffs_; }
  double last_error() const { return last_error_; }

 private:
  std::vector<double> last_coeffs_;
  double last_error_;
};

}  // namespace gentrans
