#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hkc {

// Base for every failure that stems from the mathematics of the input
// (as opposed to malformed text or CLI usage).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A coefficient that is needed to decide the answer is not known.
class PrecisionError : public MathError {
 public:
  using MathError::MathError;
};

// The observed values never reached gcd 1: the extension R ⊆ k[[t]] is not
// birational for this parameter.
class GcdError : public MathError {
 public:
  using MathError::MathError;
};

// Preconditions of a rewriting step do not hold.
class HypothesisError : public MathError {
 public:
  using MathError::MathError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hkc
