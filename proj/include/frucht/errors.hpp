#pragma once

#include <stdexcept>
#include <string>

namespace frucht {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad vertex id, loop edge, bad table...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text input that failed to parse. `line()` is 1-based, 0 when unknown.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A configured size bound (group cap, rank bound, DRR bound) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The identity was offered as a generator; a Cayley graph built from it would have loops.
class IdentityInGeneratingSet : public InputError {
 public:
  IdentityInGeneratingSet() : InputError("identity element is not allowed in a generating set") {}
};

class NotGenerating : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace frucht
