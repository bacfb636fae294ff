#pragma once

#include <stdexcept>
#include <string>

namespace stairbound {

/// Bad input: invalid graph, infeasible parameters, out-of-range indices.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured enumeration budget was exceeded (caller may retry with
/// sampled mode or a larger budget).
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// A mechanical verification check found a violation.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stairbound
