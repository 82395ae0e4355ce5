#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace forest_turan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input to a graph builder or constructor (bad index, bad parameter).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside the range where a formula or routine is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A theorem was asked about a forest that violates its hypothesis.
class HypothesisError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A search ran past its configured budget. The message names the budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate)
      : Error(what), best_estimate_(best_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

}  // namespace forest_turan
