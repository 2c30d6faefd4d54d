#pragma once

#include <stdexcept>
#include <string>

namespace qedem {

// Violated precondition or invariant of a physics operation.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Discretization too coarse for the requested evaluation (bump narrower than
// the grid can carry, and similar).
class ResolutionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A numerical routine could not reach the accuracy its contract promises.
// Carries the error estimate it did achieve.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

// Malformed or inconsistent run configuration. The message names the
// offending key or section.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qedem
