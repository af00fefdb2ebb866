#pragma once

#include <stdexcept>
#include <string>

namespace semitree {

// The complement of the given gap set is not closed under addition.
class NotASemigroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Generators share a common divisor > 1 and no cap was supplied, so the
// complement would be infinite.
class NotCofinite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A child offset that does not name a right primitive was requested.
class NotAPrimitive : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Family parameter p must be a positive even number.
class InvalidP : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested semigroup needs a conductor beyond the compiled capacity.
class CapacityExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed semigroup spec text; position is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what), position(pos) {}
  size_t position;
};

}  // namespace semitree
