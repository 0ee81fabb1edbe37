#pragma once

#include <stdexcept>
#include <string>

namespace nvread {

/// Numerical failure in an otherwise well-posed computation (non-finite
/// objective, exhausted iteration ladder, ...). CLI maps this to exit code 2.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class ConvergenceError : public NumericalError {
 public:
  explicit ConvergenceError(const std::string& what) : NumericalError(what) {}
};

/// Inputs that make the requested statistic undefined (n0 == n1 for the
/// spin-fraction estimator, n0 + n1 == 0 for photon statistics).
class DegenerateError : public std::domain_error {
 public:
  explicit DegenerateError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace nvread
