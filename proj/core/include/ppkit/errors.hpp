#pragma once

#include <stdexcept>
#include <string>

namespace ppkit {

enum class ErrorKind {
  DimensionMismatch,
  NonAssociative,
  BadUnit,
  NotAField,
  NotARepresentation,
  NotAMorphism,
  SideMismatch,
  AlgebraMismatch,
  NotGenerating,
  NotASubmodule,
  ArityMismatch,
  LengthMismatch,
  EmptyContext,
  NoExplicitPairs,
  NotInSolutionSet,
  CapExceeded,
  ParseError,
  UnknownReference,
  ValidationFailure,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }
  // The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace ppkit
