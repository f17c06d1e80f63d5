#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antitop {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments to an operation (bad parameters, malformed labels).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A subset or family belongs to a different universe than expected.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// Request exceeds an enumeration or fixpoint guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Operation defined only for anti-topologies received some other family.
class NotAntiTopology : public Error {
 public:
  using Error::Error;
};

/// Formula text rejected by the lexer or parser. `position` is a 0-based
/// character offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Formula evaluation failed (e.g. a variable without a valuation).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace antitop
