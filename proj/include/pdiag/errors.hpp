#pragma once

#include <stdexcept>
#include <string>

namespace pdiag {

/// Rejected input. `parameter()` names the offending argument ("q", "n", "k", ...).
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string parameter, const std::string& message)
      : std::invalid_argument(parameter + ": " + message), parameter_(std::move(parameter)) {}

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

/// An oracle declined to run because the instance is larger than its configured budget.
/// This is a resource limit, not a mathematical failure.
class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pdiag
