#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algcon {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor or operation received parameters outside its domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The input graph has the wrong shape for the operation (e.g. disconnected).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for this input (complete graph, wrong residue class).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// An iterative routine did not converge, or a symmetric-input contract was broken.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search request exceeds the configured size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 input. `line` is 1-based and 0 when unknown; `offset` is the byte offset within the record.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), offset_(offset), line_(line) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

}  // namespace algcon
