#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcgspin {

enum class ErrorKind {
  DimensionMismatch,
  Precondition,
  NotFound,
  Unavailable,
  Overflow,
  Parse,
  Guard,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Diagnostic carrying a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
      : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line), column_(column), message_(message) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace mcgspin
