#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied a bad root system, index, weight or option.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed; the enumeration cannot be trusted.
class IntegrityError : public Error {
public:
  using Error::Error;
};

/// Checked integer arithmetic left the representable range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// A request would exceed a configured resource ceiling.
class CeilingExceeded : public Error {
public:
  using Error::Error;
};

/// A level file or Cartan file could not be parsed.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace weyl
