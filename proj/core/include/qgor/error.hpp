#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgor {

enum class ErrorKind {
  VertexOutOfRange,
  NotAFace,
  IndexOutOfRange,
  EmptySelection,
  CapacityExceeded,
  VoidComplex,
  EmptyComplex,
  NotASubcomplex,
  NotPure,
  NotAPseudomanifold,
  InvalidPartition,
  HypothesesNotMet,
  TOutOfRange,
  GammaTwoNotIsolated,
  InvalidField,
  TooLarge,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every recoverable failure of the library is reported through this type;
/// `kind()` identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures carry the 1-based line number of the offending input line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qgor
