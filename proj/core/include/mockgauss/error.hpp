#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mockgauss {

enum class ErrorKind {
  kQuadratureNonconvergence,
  kDivisionDegenerate,
  kOutOfRange,
  kOverflow,
  kNonprimeModulus,
  kAccuracyNotAchieved,
  kPhaseResidualExceeded,
  kMissedZeroSuspected,
  kSymmetryViolation,
  kPreconditionViolation,
  kSieveRangeOverflow,
  kTailBoundExceeded,
  kIncompleteZeroData,
  kDomainViolation,
  kUnsupportedOrder,
  kEigenSolverNonconvergence,
  kParse,
};

std::string_view to_string(ErrorKind kind);

// Base of every error thrown by the library. Numerical certification failures
// carry the budget that was missed; configuration errors carry none.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double attained = 0.0, double budget = 0.0)
      : std::runtime_error(what), kind_(kind), attained_(attained), budget_(budget) {}

  ErrorKind kind() const noexcept { return kind_; }
  double attained() const noexcept { return attained_; }
  double budget() const noexcept { return budget_; }

  // True for failures caused by bad input rather than by numerics.
  bool is_config_error() const noexcept;

 private:
  ErrorKind kind_;
  double attained_;
  double budget_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what, double attained = 0.0,
                       double budget = 0.0);

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace mockgauss
