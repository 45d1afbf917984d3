#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stanley {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search refused to run because its input exceeds a configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace stanley
