#pragma once

#include <stdexcept>
#include <string>

namespace plektonlab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input data does not satisfy a type invariant (non-Lorentz matrix, bad arc, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Continuation of a lifted angle could not resolve a step.
class LiftFailure : public Error {
 public:
  using Error::Error;
};

/// Relative winding number does not exist for the given arcs.
class WindingError : public Error {
 public:
  using Error::Error;
};

/// Malformed model / scene / word file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace plektonlab
