#pragma once

#include <stdexcept>
#include <string>

namespace orbent {

// A caller supplied an argument outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input (distribution strings, block lists) could not be parsed.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// An internal arithmetic invariant failed. Every quotient computed by this
// library is an integer by orbit-stabilizer, so seeing this means a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InexactDivision : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace orbent
