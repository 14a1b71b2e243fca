#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace racg {

enum class ErrorKind {
  ZeroPolynomial,
  EndpointIsRoot,
  MixedRadicands,
  NotSquarefree,
  NotSymmetric,
  DimensionMismatch,
  SyntaxError,
  IndexOutOfRange,
  DuplicateEdge,
  TooFewVertices,
  NTooSmall,
  Disconnected,
  NoEdges,
  VerificationFailed,
  DegenerateAtD,
  InequalityFailed,
  SameVertex,
  DegenerateForm,
  UnexpectedDimension,
  NotAnEdge,
  BelowThreshold,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Errors that signal a broken internal invariant rather than bad input.
  bool is_internal() const noexcept {
    return kind_ == ErrorKind::VerificationFailed ||
           kind_ == ErrorKind::DegenerateAtD ||
           kind_ == ErrorKind::InequalityFailed;
  }

 private:
  ErrorKind kind_;
};

}  // namespace racg
