#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strata {

/// Raised when textual input (a signature, a rational, a catalog file)
/// cannot be read.  Carries the byte offset at which reading failed.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message, std::size_t position = 0)
      : std::runtime_error(message), position_(position) {}

  /// Byte offset into the offending text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Raised when well-formed input violates a mathematical constraint
/// (invalid signature, inconsistent rank table, out-of-range family
/// parameters, and so on).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace strata
