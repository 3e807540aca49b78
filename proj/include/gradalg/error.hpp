#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradalg {

enum class ErrorKind {
  BadShape,
  NonSkewSymmetrizable,
  IndexOutOfRange,
  InvalidGrading,
  InexactDivision,
  ZeroPolynomial,
  MissingEmptySubmodule,
  DepthLimitZero,
  UnknownGrading,
  NotDynkin,
  NotReduced,
  AlgebraMismatch,
  RadicalFailure,
  NotInFac,
  GramSingular,
  NonIntegralSolution,
  InterpolationMismatch,
  TooLarge,
  BadParameters,
  NotInLattice,
  ParseError,
  Internal,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::NonSkewSymmetrizable: return "NonSkewSymmetrizable";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidGrading: return "InvalidGrading";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::MissingEmptySubmodule: return "MissingEmptySubmodule";
    case ErrorKind::DepthLimitZero: return "DepthLimitZero";
    case ErrorKind::UnknownGrading: return "UnknownGrading";
    case ErrorKind::NotDynkin: return "NotDynkin";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::RadicalFailure: return "RadicalFailure";
    case ErrorKind::NotInFac: return "NotInFac";
    case ErrorKind::GramSingular: return "GramSingular";
    case ErrorKind::NonIntegralSolution: return "NonIntegralSolution";
    case ErrorKind::InterpolationMismatch: return "InterpolationMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NotInLattice: return "NotInLattice";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Domain error carrying a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace gradalg
