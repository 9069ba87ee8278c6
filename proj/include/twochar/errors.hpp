#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace twochar {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structure failed one of its axioms (group, subgroup, cocycle, 2-rep ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class LevelMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured resource cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// Input outside the supported class (e.g. a non-faithful groupoid map).
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace twochar

namespace twochar {

/// Outcome of an exhaustive check; `witness` describes the first failure.
struct Report {
  bool ok = true;
  std::string witness;

  static Report pass() { return {}; }
  static Report fail(std::string witness) { return {false, std::move(witness)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace twochar
