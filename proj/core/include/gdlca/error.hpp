#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdlca {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input to an operation (bad index, bad symbol, bad shape).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Error while reading an algebra-definition file. Carries the 1-based line and
/// the field being parsed when the error was detected.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message)
      : Error("line " + std::to_string(line) + ", field '" + field + "': " + message),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace gdlca
