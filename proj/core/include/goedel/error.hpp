#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goedel {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula, valuation or digit text. `column` is 1-based; 0 when
/// the error is not tied to a position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column, std::size_t line = 0);

  std::size_t column() const { return column_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t column_;
  std::size_t line_;
};

/// A stream name that the registry does not know.
class RegistryError : public Error {
 public:
  using Error::Error;
};

/// Unreadable files and queries past the end of a file-backed digit stream.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace goedel
