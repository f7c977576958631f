#pragma once

#include <functional>
#include <span>
#include <vector>

namespace mockgauss {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;  // integral of |f|, sets the rounding floor
  int intervals = 0;
};

struct QuadOptions {
  double abs_tol = 1e-12;
  int max_intervals = 4000;
};

// Globally adaptive 21-point Gauss-Kronrod integration of f over [a, b] with an
// absolute tolerance. Interior breakpoints (kinks, support edges) are honoured
// as forced panel boundaries. Throws kQuadratureNonconvergence when the error
// estimate stays above the tolerance after max_intervals panels.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     std::span<const double> breakpoints = {}, const QuadOptions& opts = {});

// Same, but never throws: the caller inspects the returned error.
QuadResult integrate_unchecked(const std::function<double(double)>& f, double a, double b,
                               std::span<const double> breakpoints = {},
                               const QuadOptions& opts = {});

// \int_Y^inf f(x) dx for Y > 0 via the substitution x = Y / s. Intended for
// decreasing, non-oscillatory bounds; never throws.
QuadResult integrate_to_infinity(const std::function<double(double)>& f, double Y,
                                 const QuadOptions& opts = {});

// Sorted, deduplicated breakpoints clipped to the open interval (a, b).
std::vector<double> interior_breakpoints(std::span<const double> points, double a, double b);

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace mockgauss
