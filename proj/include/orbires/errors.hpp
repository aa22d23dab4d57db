#pragma once

#include <stdexcept>
#include <string>

namespace orbires {

/// Malformed user input: bad syntax, unknown variables, invalid weights or
/// fields. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A syntax error in polynomial text, with the byte offset where it occurred.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A well-formed request the engine cannot carry out (non-isolated zero,
/// ideal not zero-dimensional, point not a zero, ...). Maps to exit code 3.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The system has no zeros at all (its ideal is the unit ideal).
class EmptyVarietyError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace orbires
