#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptchain {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: dimension too small, length mismatch, truncation too
/// small, out-of-range grid values, too few fit points.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A characteristic polynomial that should be even (or odd) in E is not.
class ParityViolation : public Error {
 public:
  using Error::Error;
};

class SolverNonconvergence : public Error {
 public:
  using Error::Error;
};

/// A closed form was evaluated outside its domain (negative square-root
/// argument, missing positive root).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A threshold search found more than one change of the reality predicate.
class NonMonotonePredicate : public Error {
 public:
  NonMonotonePredicate(const std::string& what, std::vector<std::pair<double, double>> brackets)
      : Error(what), brackets_(std::move(brackets)) {}

  const std::vector<std::pair<double, double>>& brackets() const noexcept { return brackets_; }

 private:
  std::vector<std::pair<double, double>> brackets_;
};

}  // namespace ptchain
