#include "ppkit/errors.hpp"

namespace ppkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::BadUnit: return "BadUnit";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::NotARepresentation: return "NotARepresentation";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::SideMismatch: return "SideMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::NotASubmodule: return "NotASubmodule";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyContext: return "EmptyContext";
    case ErrorKind::NoExplicitPairs: return "NoExplicitPairs";
    case ErrorKind::NotInSolutionSet: return "NotInSolutionSet";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::ValidationFailure: return "ValidationFailure";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ppkit
