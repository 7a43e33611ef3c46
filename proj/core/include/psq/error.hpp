#pragma once

#include <stdexcept>
#include <string>

namespace psq {

/// Raised when text cannot be read as a string in the `a-z` / comma-id format.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an argument is outside the domain an operation accepts
/// (mismatched alphabets, out-of-range periods, invalid intervals...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace psq
