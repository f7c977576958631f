#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mockgauss {

enum class FnKind { kZero, kBox, kTriangle, kCosineWindow, kConvolution, kSmallZero, kScaled };

std::string_view to_string(FnKind kind);

// An even test function carried by its compactly supported Fourier transform
// fhat(u) = \int f(x) e^{-2 pi i x u} dx, with x-space values derived from it.
// Decay is certified as |f(x)| <= A (1 + |x|)^{-(1 + delta)}.
class TestFunction {
 public:
  TestFunction();  // the zero function

  static TestFunction zero();
  // fhat = indicator of [-a, a]. Not admissible on its own (delta = 0).
  static TestFunction box(double a);
  // fhat = (1 - |u|/alpha)_+.
  static TestFunction triangle(double alpha);
  // fhat = cos(pi u / 2R) on |u| <= R.
  static TestFunction cosine_window(double R);
  // fhat = a * b (convolution), f = f_a f_b.
  static TestFunction convolution(const TestFunction& a, const TestFunction& b);
  // f = (x^2 - beta^2) g(x)^2 with ghat the cosine window of half-width R.
  static TestFunction smallzero(double R, double beta);
  // f(x) = inner(s x), fhat(u) = inner_hat(u / s) / s.
  static TestFunction scaled(double s, const TestFunction& inner);

  FnKind kind() const;
  double fhat(double u) const;
  // Derivative of fhat away from kinks.
  double fhat_derivative(double u) const;
  double f(double x) const;
  // f(x) by quadrature of the inverse transform, bypassing closed forms.
  double f_by_transform(double x) const;

  double support_halfwidth() const;
  double decay_exponent() const;  // delta
  double decay_constant() const;  // A
  bool admissible() const { return decay_exponent() > 0.0; }

  // Nonnegative points where fhat or its derivative may jump, including 0 and
  // the support edge; sorted.
  std::vector<double> kinks() const;

  // Parameters: box/triangle -> {a}, cosine window -> {R},
  // smallzero -> {R, beta}, scaled -> {s}.
  std::vector<double> parameters() const;
  // Children of convolution (two) and scaled (one).
  std::vector<TestFunction> children() const;

  std::string descriptor() const;

  struct Node;

 private:
  explicit TestFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Parses descriptors such as "triangle:1", "coswin:0.5",
// "smallzero:R=0.5,beta=0.7", "conv(coswin:0.5,coswin:0.5)", "scaled(2,triangle:1)".
TestFunction parse_test_function(std::string_view descriptor);

// Convolution of two Fourier-side functions evaluated at u.
double convolve_hat(const TestFunction& a, const TestFunction& b, double u);

// \int f = fhat(0) is available directly; these are the quadratic functionals.
// \int min(1, |u|) fhat(u)^2 du.
double sigma_sq(const TestFunction& f);
// \int_{-1}^{1} |u| fhat(u)^2 du.
double variance_target(const TestFunction& f);
// \int fhat(u)^2 du = \int f(x)^2 dx.
double l2_norm_sq(const TestFunction& f);
// \int f(x) dx over x in [0, inf) computed on the Fourier side; equals fhat(0)/2.
inline double half_line_integral(const TestFunction& f) { return 0.5 * f.fhat(0.0); }

// sqrt( (1/4 pi^2) \int_0^inf ghat'(u)^2 du / \int_0^inf ghat(u)^2 du ).
double b_constant(const TestFunction& ghat);

TestFunction smallzero_testfn(double R, double beta);

}  // namespace mockgauss
