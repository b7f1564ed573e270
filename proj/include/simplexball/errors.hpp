#pragma once

#include <stdexcept>
#include <string>

namespace simplexball {

/// Out-of-range parameter, bad index set, or a violated precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input text that is not a valid simplex, rational or JSON document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vertex set does not span the ambient space (or a matrix failed to factor).
class DegenerateSimplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact-only operation was handed floating-point data.
class ModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Something that is mathematically impossible happened; indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace simplexball
