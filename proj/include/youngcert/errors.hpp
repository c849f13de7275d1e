#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "youngcert/enclosure.hpp"

namespace youngcert {

// A point or range fell outside the domain/codomain it must live in.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what,
                       std::optional<std::size_t> index = std::nullopt)
      : std::domain_error(what), index_(index) {}

  // Position of the offending item in a batch (sweep), when there is one.
  std::optional<std::size_t> index() const { return index_; }

 private:
  std::optional<std::size_t> index_;
};

// Bisection did not reach its width target; the function object is broken.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Quadrature refinement ran out of panels. Carries the best enclosure reached.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, Enclosure best, std::int64_t panels)
      : std::runtime_error(what), best_(best), panels_(panels) {}

  const Enclosure& best() const { return best_; }
  std::int64_t panels() const { return panels_; }

 private:
  Enclosure best_;
  std::int64_t panels_;
};

// Merkle's bound is only stated for alpha1 = beta1 = 0.
class UnsupportedOrigin : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two independent routes to the same quantity produced disjoint enclosures.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace youngcert
