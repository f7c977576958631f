#include "mockgauss/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "mockgauss/error.hpp"

namespace mockgauss {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kShiftRadius = 15.0;
constexpr int kStirlingTerms = 10;

const std::array<double, 16>& bernoulli_table() {
  static const std::array<double, 16> table = [] {
    std::array<double, 16> t{};
    for (int k = 0; k < 16; ++k) {
      t[k] = boost::math::bernoulli_b2n<double>(k) / boost::math::factorial<double>(2 * k);
    }
    return t;
  }();
  return table;
}

cdouble log_gamma_right(cdouble z) {
  cdouble shift_sum = 0.0;
  cdouble w = z;
  while (std::abs(w) < kShiftRadius || w.real() < 1.0) {
    shift_sum += std::log(w);
    w += 1.0;
  }
  cdouble inv = 1.0 / w;
  cdouble inv2 = inv * inv;
  cdouble series = 0.0;
  cdouble power = inv;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    double b = boost::math::bernoulli_b2n<double>(k);
    series += b / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi) + series - shift_sum;
}

cdouble digamma_right(cdouble z) {
  cdouble shift_sum = 0.0;
  cdouble w = z;
  while (std::abs(w) < kShiftRadius || w.real() < 1.0) {
    shift_sum += 1.0 / w;
    w += 1.0;
  }
  cdouble inv = 1.0 / w;
  cdouble inv2 = inv * inv;
  cdouble series = 0.0;
  cdouble power = inv2;
  for (int k = 1; k <= kStirlingTerms; ++k) {
    double b = boost::math::bernoulli_b2n<double>(k);
    series += b / (2.0 * k) * power;
    power *= inv2;
  }
  return std::log(w) - 0.5 * inv - series - shift_sum;
}

}  // namespace

double bernoulli_over_factorial(int k) {
  if (k < 0 || k >= 16) fail(ErrorKind::kOutOfRange, "Bernoulli index beyond table");
  return bernoulli_table()[static_cast<std::size_t>(k)];
}

cdouble log_gamma(cdouble z) {
  if (z.real() > 0.0) return log_gamma_right(z);
  // Reflection; the result is a logarithm of Gamma(z), not necessarily the
  // principal one.
  cdouble s = std::sin(kPi * z);
  if (std::abs(s) == 0.0) fail(ErrorKind::kDomainViolation, "log_gamma at a pole");
  return std::log(kPi) - std::log(s) - log_gamma_right(1.0 - z);
}

cdouble digamma(cdouble z) {
  if (z.real() > 0.0) return digamma_right(z);
  cdouble t = std::tan(kPi * z);
  if (std::abs(t) == 0.0) fail(ErrorKind::kDomainViolation, "digamma at a pole");
  return digamma_right(1.0 - z) - kPi / t;
}

double digamma(double x) { return boost::math::digamma(x); }

double expint_e1(double x) {
  if (!(x > 0.0)) fail(ErrorKind::kDomainViolation, "E1 requires x > 0");
  return boost::math::expint(1, x);
}

HurwitzValue hurwitz_zeta(cdouble s, double a, int shift, int bernoulli_terms) {
  if (!(a > 0.0 && a <= 1.0)) fail(ErrorKind::kDomainViolation, "Hurwitz zeta needs 0 < a <= 1");
  if (bernoulli_terms < 1 || bernoulli_terms >= 16) {
    fail(ErrorKind::kOutOfRange, "Bernoulli correction order must be in 1..15");
  }
  const double sigma = s.real();
  if (sigma + 2.0 * bernoulli_terms - 1.0 <= 0.0) {
    fail(ErrorKind::kDomainViolation, "Euler-Maclaurin remainder bound needs Re s > 1 - 2K");
  }
  if (std::abs(s - 1.0) < 1e-300) fail(ErrorKind::kDomainViolation, "Hurwitz zeta pole at s = 1");

  cdouble direct = 0.0;
  for (int n = 0; n < shift; ++n) {
    direct += std::exp(-s * std::log(n + a));
  }
  const double x = shift + a;
  const double log_x = std::log(x);
  const cdouble x_pow = std::exp(-s * log_x);  // x^{-s}
  cdouble tail = x * x_pow / (s - 1.0) + 0.5 * x_pow;

  // B_{2k}/(2k)! (s)_{2k-1} x^{-s-2k+1}
  cdouble rising = s;  // (s)_1
  double x_inv = 1.0 / x;
  double x_power = x_inv;  // x^{-(2k-1)} starting at k = 1
  for (int k = 1; k <= bernoulli_terms; ++k) {
    tail += bernoulli_table()[k] * rising * x_pow * x_power;
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    x_power *= x_inv * x_inv;
  }
  // |B_{2K}|/(2K)! |(s)_{2K}| x^{1 - sigma - 2K} / (sigma + 2K - 1)
  const int K = bernoulli_terms;
  cdouble rising_2k = 1.0;
  for (int j = 0; j < 2 * K; ++j) rising_2k *= (s + static_cast<double>(j));
  double bound = std::abs(bernoulli_table()[K]) * std::abs(rising_2k) *
                 std::exp((1.0 - sigma - 2.0 * K) * log_x) / (sigma + 2.0 * K - 1.0);
  return {direct + tail, bound};
}

}  // namespace mockgauss
