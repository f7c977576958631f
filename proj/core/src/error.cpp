#include "mockgauss/error.hpp"

namespace mockgauss {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kQuadratureNonconvergence: return "quadrature-nonconvergence";
    case ErrorKind::kDivisionDegenerate: return "division-degenerate";
    case ErrorKind::kOutOfRange: return "out-of-range";
    case ErrorKind::kOverflow: return "overflow";
    case ErrorKind::kNonprimeModulus: return "nonprime-modulus";
    case ErrorKind::kAccuracyNotAchieved: return "accuracy-not-achieved";
    case ErrorKind::kPhaseResidualExceeded: return "phase-residual-exceeded";
    case ErrorKind::kMissedZeroSuspected: return "missed-zero-suspected";
    case ErrorKind::kSymmetryViolation: return "symmetry-violation";
    case ErrorKind::kPreconditionViolation: return "precondition-violation";
    case ErrorKind::kSieveRangeOverflow: return "sieve-range-overflow";
    case ErrorKind::kTailBoundExceeded: return "tail-bound-exceeds-tolerance";
    case ErrorKind::kIncompleteZeroData: return "incomplete-zero-data";
    case ErrorKind::kDomainViolation: return "domain-violation";
    case ErrorKind::kUnsupportedOrder: return "unsupported-order";
    case ErrorKind::kEigenSolverNonconvergence: return "eigen-solver-nonconvergence";
    case ErrorKind::kParse: return "parse-error";
  }
  return "unknown";
}

bool Error::is_config_error() const noexcept {
  switch (kind_) {
    case ErrorKind::kOutOfRange:
    case ErrorKind::kOverflow:
    case ErrorKind::kNonprimeModulus:
    case ErrorKind::kPreconditionViolation:
    case ErrorKind::kSieveRangeOverflow:
    case ErrorKind::kDomainViolation:
    case ErrorKind::kUnsupportedOrder:
    case ErrorKind::kParse:
      return true;
    default:
      return false;
  }
}

void fail(ErrorKind kind, const std::string& what, double attained, double budget) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what, attained, budget);
}

}  // namespace mockgauss
