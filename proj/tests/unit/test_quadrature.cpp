#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "mockgauss/error.hpp"
#include "mockgauss/quadrature.hpp"

using namespace mockgauss;

TEST(Quadrature, PolynomialExact) {
  auto r = integrate([](double x) { return x * x * x - 2 * x; }, -1.0, 3.0);
  EXPECT_NEAR(r.value, 12.0, 1e-13);
}

TEST(Quadrature, KinkAtBreakpoint) {
  std::vector<double> br{0.3};
  auto r = integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, br);
  EXPECT_NEAR(r.value, 0.5 * (0.09 + 0.49), 1e-15);
  EXPECT_LE(r.intervals, 4);
}

TEST(Quadrature, OscillatoryAdaptive) {
  QuadOptions o;
  o.abs_tol = 1e-12;
  auto r = integrate([](double x) { return std::cos(50.0 * x); }, 0.0, 10.0, {}, o);
  EXPECT_NEAR(r.value, std::sin(500.0) / 50.0, 1e-12);
}

TEST(Quadrature, NonconvergenceReported) {
  QuadOptions o;
  o.abs_tol = 1e-14;
  o.max_intervals = 3;
  try {
    integrate([](double x) { return 1.0 / std::sqrt(std::abs(x - 0.2137)); }, 0.0, 1.0, {}, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kQuadratureNonconvergence);
  }
}

TEST(Quadrature, ToInfinity) {
  auto r = integrate_to_infinity([](double x) { return 1.0 / (x * x); }, 2.0);
  EXPECT_NEAR(r.value, 0.5, 1e-13);
  auto e = integrate_to_infinity([](double x) { return std::exp(-x); }, 1.0);
  EXPECT_NEAR(e.value, std::exp(-1.0), 1e-12);
  auto lg = integrate_to_infinity([](double x) { return std::log(x) / (x * x); }, 1.0);
  EXPECT_NEAR(lg.value, 1.0, 1e-10);
}

TEST(CompensatedSum, CancelsRounding) {
  CompensatedSum s;
  s += 1.0;
  for (int i = 0; i < 1000; ++i) s += 1e-16;
  s += -1.0;
  EXPECT_NEAR(s.value(), 1e-13, 1e-20);
}
