#pragma once

#include <cstdint>
#include <vector>

#include "mockgauss/testfn.hpp"
#include "mockgauss/zeros.hpp"

namespace mockgauss {

// Lower bound for the proportion of characters with x_1 < beta, closed form.
double proportion_bound(double beta);

// The same bound from test-function integrals: 1 - \int_{-1}^{1} |u| fhat^2 / fhat(0)^2
// for f = smallzero_testfn(1/2, beta).
double proportion_bound_pipeline(double beta);

// Limit of proportion_bound as beta grows: (176 pi^2 - 48) / (192 pi^2).
double proportion_bound_limit();

// Closed-form positive root of proportion_bound.
double threshold_beta();
// Root of proportion_bound on (1/2, 1) by bisection.
double threshold_beta_bisection(double tol = 1e-14);

struct SmallZeroReport {
  std::uint64_t q = 0;
  double R = 0.5;
  double beta = 0.0;
  double B = 0.0;
  double integral_f = 0.0;  // \int f for smallzero_testfn(R, beta)
  double bound = 0.0;       // proportion_bound(beta) when beta > 1/2
  bool bound_applicable = false;
  double beta_star = 0.0;
  double liminf_target = 0.25;
  double height = 0.0;
  std::vector<std::uint64_t> char_index;
  std::vector<double> first_zeros;  // scaled x_{chi,1}
  double min_first_zero = 0.0;
  std::uint64_t argmin_char = 0;
  double fraction_below = 0.0;
};

// Fraction of lists whose first scaled zero is below beta.
double first_zero_fraction(const std::vector<ZeroList>& family, double beta);

SmallZeroReport first_zero_stats(const std::vector<ZeroList>& family, double beta, double R = 0.5);
SmallZeroReport first_zero_stats(std::uint64_t q, double beta, double T,
                                 const ZeroSearchOptions& opts = {},
                                 const ZeroCache* cache = nullptr, int workers = 1);

}  // namespace mockgauss
