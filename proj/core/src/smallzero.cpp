#include "mockgauss/smallzero.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mockgauss/error.hpp"

namespace mockgauss {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

void require_beta(double beta) {
  if (!(beta > 0.5)) fail(ErrorKind::kDomainViolation, "beta must exceed 1/2");
}

}  // namespace

double proportion_bound(double beta) {
  require_beta(beta);
  const double b2 = beta * beta;
  const double b4 = b2 * b2;
  const double num = 11.0 * kPi2 - 3.0 - 72.0 * b2 - 88.0 * kPi2 * b2 - 48.0 * b4 + 176.0 * kPi2 * b4;
  const double d = 4.0 * b2 - 1.0;
  return num / (12.0 * kPi2 * d * d);
}

double proportion_bound_pipeline(double beta) {
  require_beta(beta);
  const TestFunction f = smallzero_testfn(0.5, beta);
  const double f0 = f.fhat(0.0);
  return 1.0 - variance_target(f) / (f0 * f0);
}

double proportion_bound_limit() { return (176.0 * kPi2 - 48.0) / (192.0 * kPi2); }

double threshold_beta() {
  return 0.5 * std::sqrt(9.0 + 11.0 * kPi2 + 2.0 * std::sqrt(18.0 + 66.0 * kPi2)) /
         std::sqrt(11.0 * kPi2 - 3.0);
}

double threshold_beta_bisection(double tol) {
  double lo = 0.5 + 1e-9;
  double hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (proportion_bound(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double first_zero_fraction(const std::vector<ZeroList>& family, double beta) {
  if (family.empty()) fail(ErrorKind::kIncompleteZeroData, "no zero lists");
  std::size_t below = 0;
  for (const ZeroList& z : family) {
    if (z.scaled.empty()) {
      fail(ErrorKind::kIncompleteZeroData,
           "character " + std::to_string(z.char_index) + " has no zero below the search height");
    }
    if (z.scaled.front() < beta) ++below;
  }
  return static_cast<double>(below) / static_cast<double>(family.size());
}

SmallZeroReport first_zero_stats(const std::vector<ZeroList>& family, double beta, double R) {
  SmallZeroReport rep;
  rep.R = R;
  rep.beta = beta;
  rep.B = 1.0 / (4.0 * R);
  rep.integral_f = smallzero_testfn(R, beta).fhat(0.0);
  rep.bound_applicable = beta > 0.5;
  rep.bound = rep.bound_applicable ? proportion_bound(beta) : std::numeric_limits<double>::quiet_NaN();
  rep.beta_star = threshold_beta();
  rep.fraction_below = first_zero_fraction(family, beta);
  rep.q = family.front().q;
  rep.height = family.front().height;
  rep.min_first_zero = std::numeric_limits<double>::infinity();
  for (const ZeroList& z : family) {
    rep.char_index.push_back(z.char_index);
    rep.first_zeros.push_back(z.scaled.front());
    rep.height = std::min(rep.height, z.height);
    if (z.scaled.front() < rep.min_first_zero) {
      rep.min_first_zero = z.scaled.front();
      rep.argmin_char = z.char_index;
    }
  }
  return rep;
}

SmallZeroReport first_zero_stats(std::uint64_t q, double beta, double T, const ZeroSearchOptions& opts,
                                 const ZeroCache* cache, int workers) {
  DirichletGroup group(q);
  return first_zero_stats(find_zeros_family(group, T, opts, cache, workers), beta, 0.5);
}

}  // namespace mockgauss
