#include "racg/error.hpp"

namespace racg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorKind::MixedRadicands: return "MixedRadicands";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::NTooSmall: return "NTooSmall";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NoEdges: return "NoEdges";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::DegenerateAtD: return "DegenerateAtD";
    case ErrorKind::InequalityFailed: return "InequalityFailed";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::UnexpectedDimension: return "UnexpectedDimension";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::BelowThreshold: return "BelowThreshold";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace racg
