#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace landau {

// Precondition violation on a caller-supplied argument.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Hyperbolic field too weak for bound states (2B <= 1).
class NoBoundStates : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Signature whose Gauss-Bonnet area is not positive.
class InvalidSignature : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The incompleteness witness only exists when 2*m0 < (B-n)/(1+n).
class WitnessRegimeRefused : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Non-finite integrand value or quadrature cross-check failure.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, std::size_t node_index)
      : std::runtime_error(what), node_index_(node_index) {}
  explicit QuadratureError(const std::string& what)
      : std::runtime_error(what), node_index_(static_cast<std::size_t>(-1)) {}

  std::size_t node_index() const noexcept { return node_index_; }

 private:
  std::size_t node_index_;
};

// A q-series truncation too short for the requested accuracy.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int required_truncation)
      : std::runtime_error(what), required_(required_truncation) {}

  int required_truncation() const noexcept { return required_; }

 private:
  int required_;
};

}  // namespace landau
