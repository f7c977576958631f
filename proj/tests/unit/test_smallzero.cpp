#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "mockgauss/error.hpp"
#include "mockgauss/smallzero.hpp"
#include "mockgauss/testfn.hpp"
#include "mockgauss/zeros.hpp"
#include "oracles.hpp"

using namespace mockgauss;
using oracle::kPi;

namespace {

// 1 - \int_{-1}^{1} |u| fhat^2 / fhat(0)^2 by plain quadrature of the Fourier side.
double bound_by_quadrature(double beta) {
  const auto f = TestFunction::smallzero(0.5, beta);
  const double v = 2.0 * oracle::integrate([&](double u) { return u * f.fhat(u) * f.fhat(u); }, 0.0, 1.0, 128);
  return 1.0 - v / (f.fhat(0.0) * f.fhat(0.0));
}

ZeroList fake_list(std::uint64_t k, std::vector<double> scaled) {
  ZeroList z;
  z.q = 101;
  z.char_index = k;
  z.scaled = scaled;
  z.ordinates = scaled;
  return z;
}

}  // namespace

TEST(ProportionBound, ThresholdValue) {
  const double b = threshold_beta();
  EXPECT_NEAR(b, 0.633, 5e-4);
  EXPECT_GT(proportion_bound(b + 1e-6), 0.0);
  EXPECT_LT(proportion_bound(b - 1e-6), 0.0);
  EXPECT_NEAR(proportion_bound(b), 0.0, 5e-4);
  EXPECT_NEAR(threshold_beta_bisection(), b, 1e-10);
}

TEST(ProportionBound, LargeBetaLimit) {
  EXPECT_DOUBLE_EQ(proportion_bound_limit(), (176.0 * kPi * kPi - 48.0) / (192.0 * kPi * kPi));
  EXPECT_NEAR(proportion_bound(1e3), proportion_bound_limit(), 1e-5);
}

TEST(ProportionBound, PathsAgree) {
  for (double beta : {0.65, 0.7, 0.8}) {
    EXPECT_NEAR(proportion_bound(beta), proportion_bound_pipeline(beta), 1e-6) << beta;
    EXPECT_NEAR(proportion_bound(beta), bound_by_quadrature(beta), 1e-8) << beta;
  }
  for (double beta = 0.64; beta <= 2.0 + 1e-12; beta += 0.04) {
    EXPECT_NEAR(proportion_bound(beta), proportion_bound_pipeline(beta), 1e-6) << beta;
  }
}

TEST(ProportionBound, IncreasingInBeta) {
  double prev = proportion_bound(0.51);
  for (double beta = 0.52; beta < 3.0; beta += 0.01) {
    const double v = proportion_bound(beta);
    EXPECT_GT(v, prev) << beta;
    prev = v;
  }
}

TEST(ProportionBound, DomainViolation) {
  for (double beta : {0.5, 0.3, -1.0}) {
    try {
      proportion_bound(beta);
      ADD_FAILURE() << beta;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kDomainViolation);
    }
  }
}

TEST(FirstZeros, FractionMonotoneAndBounded) {
  const std::vector<ZeroList> fam{fake_list(1, {0.2, 1.0}), fake_list(2, {0.6}), fake_list(3, {0.9, 1.4}),
                                  fake_list(4, {1.3})};
  EXPECT_EQ(first_zero_fraction(fam, 0.1), 0.0);
  EXPECT_EQ(first_zero_fraction(fam, 0.7), 0.5);
  EXPECT_EQ(first_zero_fraction(fam, 2.0), 1.0);
  double prev = 0.0;
  for (double b = 0.0; b < 2.0; b += 0.05) {
    const double fr = first_zero_fraction(fam, b);
    EXPECT_GE(fr, prev);
    prev = fr;
  }
  const auto rep = first_zero_stats(fam, 0.7, 0.5);
  EXPECT_EQ(rep.B, 0.5);
  EXPECT_EQ(rep.min_first_zero, 0.2);
  EXPECT_EQ(rep.argmin_char, 1u);
  EXPECT_EQ(rep.fraction_below, 0.5);
  EXPECT_EQ(rep.first_zeros, (std::vector<double>{0.2, 0.6, 0.9, 1.3}));
  EXPECT_TRUE(rep.bound_applicable);
  EXPECT_EQ(rep.bound, proportion_bound(0.7));
  EXPECT_EQ(rep.beta_star, threshold_beta());
  EXPECT_EQ(rep.liminf_target, 0.25);
  EXPECT_LT(rep.integral_f, 0.0);
  EXPECT_EQ(first_zero_stats(fam, 0.4, 1.0).B, 0.25);
  EXPECT_FALSE(first_zero_stats(fam, 0.4, 0.5).bound_applicable);
}

TEST(FirstZeros, IncompleteData) {
  EXPECT_THROW(first_zero_fraction({}, 0.5), Error);
  const std::vector<ZeroList> fam{fake_list(1, {0.2}), fake_list(2, {})};
  try {
    first_zero_fraction(fam, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIncompleteZeroData);
  }
}

TEST(FirstZeros, FamilyAtQ101) {
  const auto rep = first_zero_stats(101, 0.7, 40.0);
  EXPECT_EQ(rep.q, 101u);
  ASSERT_EQ(rep.first_zeros.size(), 99u);
  EXPECT_GE(rep.fraction_below, 0.0);
  EXPECT_LE(rep.fraction_below, 1.0);
  double mn = rep.first_zeros[0];
  for (double x : rep.first_zeros) mn = std::min(mn, x);
  EXPECT_EQ(rep.min_first_zero, mn);
  DirichletGroup g(101);
  const auto z = find_zeros(g.character(rep.argmin_char), 40.0);
  EXPECT_NEAR(z.scaled.front(), rep.min_first_zero, 1e-12);
  EXPECT_NEAR(rep.bound, 0.460369530610722, 1e-12);
}
