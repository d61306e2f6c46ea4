#pragma once

#include <stdexcept>
#include <string>

namespace runforge {

/// Bad argument to a library operation (out of domain, malformed request).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Word text could not be parsed. `position` is 1-based.
class ParseError : public ArgumentError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ArgumentError(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operation only defined for a specific alphabet size.
class UnsupportedAlphabetError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Request exceeds an enumeration or packing limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed-form expression evaluated outside the range where it is valid.
class FormulaDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace runforge
