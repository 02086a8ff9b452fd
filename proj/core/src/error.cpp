#include "qgor/error.hpp"

namespace qgor {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptySelection: return "EmptySelection";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::VoidComplex: return "VoidComplex";
    case ErrorKind::EmptyComplex: return "EmptyComplex";
    case ErrorKind::NotASubcomplex: return "NotASubcomplex";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotAPseudomanifold: return "NotAPseudomanifold";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::HypothesesNotMet: return "HypothesesNotMet";
    case ErrorKind::TOutOfRange: return "TOutOfRange";
    case ErrorKind::GammaTwoNotIsolated: return "GammaTwoNotIsolated";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qgor
