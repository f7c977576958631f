#include "mockgauss/testfn.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mockgauss/error.hpp"
#include "mockgauss/quadrature.hpp"

namespace mockgauss {

struct TestFunction::Node {
  FnKind kind = FnKind::kZero;
  std::vector<double> params;
  std::vector<TestFunction> kids;
  double alpha = 0.0;
  double delta = 0.0;
  double A = 0.0;
};

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInnerTol = 1e-14;
constexpr double kSeriesWindow = 1e-4;

// sin(t)/t
double sinc(double t) {
  if (std::abs(t) < 1e-4) {
    double t2 = t * t;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sin(t) / t;
}

double cosine_window_x(double R, double x) {
  double y = 4.0 * R * std::abs(x);
  double d = y * y - 1.0;
  if (std::abs(d) < kSeriesWindow) {
    // With e = y - 1 the closed form becomes 4R sin(pi e/2) / (pi e (2 + e)).
    double e = y - 1.0;
    double h = 0.5 * kPi * e;
    double h2 = h * h;
    double sin_over_e = 0.5 * kPi * (1.0 - h2 / 6.0 + h2 * h2 / 120.0);
    return 4.0 * R * sin_over_e / (kPi * (2.0 + e));
  }
  return -4.0 * R * std::cos(0.5 * kPi * y) / (kPi * d);
}

// (ghat * ghat)(u) for the cosine window.
double coswin_self_conv(double R, double u) {
  u = std::abs(u);
  if (u >= 2.0 * R) return 0.0;
  double phase = kPi * u / (2.0 * R);
  return 0.5 * (2.0 * R - u) * std::cos(phase) + (R / kPi) * std::sin(phase);
}

// (ghat' * ghat')(u) for the cosine window.
double coswin_derivative_self_conv(double R, double u) {
  u = std::abs(u);
  if (u >= 2.0 * R) return 0.0;
  double phase = kPi * u / (2.0 * R);
  double k = kPi / (2.0 * R);
  return k * k * 0.5 * ((2.0 * R / kPi) * std::sin(phase) - (2.0 * R - u) * std::cos(phase));
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    fail(ErrorKind::kPreconditionViolation, std::string(what) + " must be positive and finite");
  }
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string_view to_string(FnKind kind) {
  switch (kind) {
    case FnKind::kZero: return "zero";
    case FnKind::kBox: return "box";
    case FnKind::kTriangle: return "triangle";
    case FnKind::kCosineWindow: return "coswin";
    case FnKind::kConvolution: return "conv";
    case FnKind::kSmallZero: return "smallzero";
    case FnKind::kScaled: return "scaled";
  }
  return "unknown";
}

TestFunction::TestFunction() : TestFunction(zero()) {}

TestFunction TestFunction::zero() {
  auto n = std::make_shared<Node>();
  n->kind = FnKind::kZero;
  n->alpha = 0.0;
  n->delta = 1.0;
  n->A = 0.0;
  return TestFunction(n);
}

TestFunction TestFunction::box(double a) {
  require_positive(a, "box half-width");
  auto n = std::make_shared<Node>();
  n->kind = FnKind::kBox;
  n->params = {a};
  n->alpha = a;
  n->delta = 0.0;
  n->A = 2.0 * a + 1.0 / kPi;
  return TestFunction(n);
}

TestFunction TestFunction::triangle(double alpha) {
  require_positive(alpha, "triangle half-width");
  auto n = std::make_shared<Node>();
  n->kind = FnKind::kTriangle;
  n->params = {alpha};
  n->alpha = alpha;
  n->delta = 1.0;
  double c = 1.0 + 1.0 / (kPi * alpha);
  n->A = alpha * c * c;
  return TestFunction(n);
}

TestFunction TestFunction::cosine_window(double R) {
  require_positive(R, "cosine window half-width");
  auto n = std::make_shared<Node>();
  n->kind = FnKind::kCosineWindow;
  n->params = {R};
  n->alpha = R;
  n->delta = 1.0;
  // |g| <= 4R/pi everywhere and |g| <= 1/(2 pi R x^2) once 4Rx >= sqrt 2.
  double c = 1.0 + 2.0 * std::numbers::sqrt2 * R;
  n->A = c * c / (2.0 * kPi * R);
  return TestFunction(n);
}

TestFunction TestFunction::convolution(const TestFunction& a, const TestFunction& b) {
  auto n = std::make_shared<Node>();
  n->kind = FnKind::kConvolution;
  n->kids = {a, b};
  n->alpha = a.support_halfwidth() + b.support_halfwidth();
  n->delta = 1.0 + a.decay_exponent() + b.decay_exponent();
  n->A = a.decay_constant() * b.decay_constant();
  return TestFunction(n);
}

TestFunction TestFunction::smallzero(double R, double beta) {
  require_positive(R, "R");
  require_positive(beta, "beta");
  TestFunction g = cosine_window(R);
  auto n = std::make_shared<Node>();
  n->kind = FnKind::kSmallZero;
  n->params = {R, beta};
  n->alpha = 2.0 * R;
  n->delta = 1.0;
  n->A = g.decay_constant() * g.decay_constant() * std::max(1.0, beta * beta);
  return TestFunction(n);
}

TestFunction TestFunction::scaled(double s, const TestFunction& inner) {
  require_positive(s, "scale");
  auto n = std::make_shared<Node>();
  n->kind = FnKind::kScaled;
  n->params = {s};
  n->kids = {inner};
  n->alpha = s * inner.support_halfwidth();
  n->delta = inner.decay_exponent();
  n->A = inner.decay_constant() * (s >= 1.0 ? 1.0 : std::pow(s, -(1.0 + n->delta)));
  return TestFunction(n);
}

FnKind TestFunction::kind() const { return node_->kind; }
double TestFunction::support_halfwidth() const { return node_->alpha; }
double TestFunction::decay_exponent() const { return node_->delta; }
double TestFunction::decay_constant() const { return node_->A; }
std::vector<double> TestFunction::parameters() const { return node_->params; }
std::vector<TestFunction> TestFunction::children() const { return node_->kids; }

double TestFunction::fhat(double u) const {
  const Node& n = *node_;
  u = std::abs(u);
  if (u > n.alpha) return 0.0;
  switch (n.kind) {
    case FnKind::kZero:
      return 0.0;
    case FnKind::kBox:
      return 1.0;
    case FnKind::kTriangle:
      return 1.0 - u / n.alpha;
    case FnKind::kCosineWindow:
      return std::cos(kPi * u / (2.0 * n.alpha));
    case FnKind::kConvolution:
      return convolve_hat(n.kids[0], n.kids[1], u);
    case FnKind::kSmallZero: {
      double R = n.params[0];
      double beta = n.params[1];
      return -coswin_derivative_self_conv(R, u) / (4.0 * kPi * kPi) -
             beta * beta * coswin_self_conv(R, u);
    }
    case FnKind::kScaled: {
      double s = n.params[0];
      return n.kids[0].fhat(u / s) / s;
    }
  }
  return 0.0;
}

double TestFunction::fhat_derivative(double u) const {
  const Node& n = *node_;
  double sign = u < 0 ? -1.0 : 1.0;
  double a = std::abs(u);
  if (a > n.alpha) return 0.0;
  switch (n.kind) {
    case FnKind::kZero:
    case FnKind::kBox:
      return 0.0;
    case FnKind::kTriangle:
      return -sign / n.alpha;
    case FnKind::kCosineWindow: {
      double k = kPi / (2.0 * n.alpha);
      return -k * std::sin(k * u);
    }
    case FnKind::kScaled: {
      double s = n.params[0];
      return n.kids[0].fhat_derivative(u / s) / (s * s);
    }
    default: {
      double h = 1e-6 * std::max(1.0, n.alpha);
      return (fhat(u + h) - fhat(u - h)) / (2.0 * h);
    }
  }
}

double TestFunction::f(double x) const {
  const Node& n = *node_;
  switch (n.kind) {
    case FnKind::kZero:
      return 0.0;
    case FnKind::kBox: {
      double a = n.params[0];
      return 2.0 * a * sinc(2.0 * kPi * a * x);
    }
    case FnKind::kTriangle: {
      double a = n.params[0];
      double s = sinc(kPi * a * x);
      return a * s * s;
    }
    case FnKind::kCosineWindow:
      return cosine_window_x(n.params[0], x);
    case FnKind::kConvolution:
      return n.kids[0].f(x) * n.kids[1].f(x);
    case FnKind::kSmallZero: {
      double g = cosine_window_x(n.params[0], x);
      double beta = n.params[1];
      return (x * x - beta * beta) * g * g;
    }
    case FnKind::kScaled:
      return n.kids[0].f(n.params[0] * x);
  }
  return 0.0;
}

double TestFunction::f_by_transform(double x) const {
  double alpha = support_halfwidth();
  if (alpha == 0.0) return 0.0;
  std::vector<double> breaks = kinks();
  double ax = std::abs(x);
  if (ax > 0.0) {
    double period = 0.5 / ax;
    int pieces = static_cast<int>(alpha / period);
    for (int i = 1; i <= pieces && i < 100000; ++i) breaks.push_back(i * period);
  }
  auto integrand = [&](double u) { return fhat(u) * std::cos(2.0 * kPi * x * u); };
  QuadOptions opts;
  opts.abs_tol = 1e-13;
  opts.max_intervals = 20000;
  return 2.0 * integrate(integrand, 0.0, alpha, breaks, opts).value;
}

std::vector<double> TestFunction::kinks() const {
  const Node& n = *node_;
  std::vector<double> out{0.0, n.alpha};
  switch (n.kind) {
    case FnKind::kConvolution: {
      for (double ka : n.kids[0].kinks()) {
        for (double kb : n.kids[1].kinks()) {
          out.push_back(ka + kb);
          out.push_back(std::abs(ka - kb));
        }
      }
      break;
    }
    case FnKind::kSmallZero:
      out.push_back(n.params[0]);
      break;
    case FnKind::kScaled:
      for (double k : n.kids[0].kinks()) out.push_back(k * n.params[0]);
      break;
    default:
      break;
  }
  std::vector<double> clipped;
  for (double k : out) {
    if (k >= 0.0 && k <= n.alpha) clipped.push_back(k);
  }
  std::sort(clipped.begin(), clipped.end());
  clipped.erase(std::unique(clipped.begin(), clipped.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-14; }),
                clipped.end());
  return clipped;
}

std::string TestFunction::descriptor() const {
  const Node& n = *node_;
  switch (n.kind) {
    case FnKind::kZero:
      return "zero";
    case FnKind::kBox:
      return "box:" + format_number(n.params[0]);
    case FnKind::kTriangle:
      return "triangle:" + format_number(n.params[0]);
    case FnKind::kCosineWindow:
      return "coswin:" + format_number(n.params[0]);
    case FnKind::kConvolution:
      return "conv(" + n.kids[0].descriptor() + "," + n.kids[1].descriptor() + ")";
    case FnKind::kSmallZero:
      return "smallzero:R=" + format_number(n.params[0]) + ",beta=" + format_number(n.params[1]);
    case FnKind::kScaled:
      return "scaled(" + format_number(n.params[0]) + "," + n.kids[0].descriptor() + ")";
  }
  return "zero";
}

double convolve_hat(const TestFunction& a, const TestFunction& b, double u) {
  u = std::abs(u);
  double aa = a.support_halfwidth();
  double ab = b.support_halfwidth();
  if (u > aa + ab || aa == 0.0 || ab == 0.0) return 0.0;
  if (a.kind() == FnKind::kBox && b.kind() == FnKind::kBox) {
    return std::max(0.0, std::min(aa, u + ab) - std::max(-aa, u - ab));
  }
  if (a.kind() == FnKind::kCosineWindow && b.kind() == FnKind::kCosineWindow && aa == ab) {
    return coswin_self_conv(aa, u);
  }
  double lo = std::max(-aa, u - ab);
  double hi = std::min(aa, u + ab);
  if (!(hi > lo)) return 0.0;
  std::vector<double> breaks;
  for (double k : a.kinks()) {
    breaks.push_back(k);
    breaks.push_back(-k);
  }
  for (double k : b.kinks()) {
    breaks.push_back(u - k);
    breaks.push_back(u + k);
  }
  auto integrand = [&](double v) { return a.fhat(v) * b.fhat(u - v); };
  QuadOptions opts;
  opts.abs_tol = kInnerTol;
  return integrate(integrand, lo, hi, breaks, opts).value;
}

namespace {

double half_line_quadratic(const TestFunction& f, double upper, double (*weight)(double)) {
  double top = std::min(upper, f.support_halfwidth());
  if (top <= 0.0) return 0.0;
  std::vector<double> breaks = f.kinks();
  breaks.push_back(1.0);
  auto integrand = [&](double u) {
    double v = f.fhat(u);
    return weight(u) * v * v;
  };
  QuadOptions opts;
  opts.abs_tol = 1e-13;
  return 2.0 * integrate(integrand, 0.0, top, breaks, opts).value;
}

}  // namespace

double sigma_sq(const TestFunction& f) {
  return half_line_quadratic(f, f.support_halfwidth(), [](double u) { return std::min(1.0, u); });
}

double variance_target(const TestFunction& f) {
  return half_line_quadratic(f, 1.0, [](double u) { return u; });
}

double l2_norm_sq(const TestFunction& f) {
  return half_line_quadratic(f, f.support_halfwidth(), [](double) { return 1.0; });
}

double b_constant(const TestFunction& ghat) {
  double alpha = ghat.support_halfwidth();
  std::vector<double> breaks = ghat.kinks();
  QuadOptions opts;
  opts.abs_tol = 1e-14;
  double num = integrate(
                   [&](double u) {
                     double d = ghat.fhat_derivative(u);
                     return d * d;
                   },
                   0.0, alpha, breaks, opts)
                   .value;
  double den = integrate(
                   [&](double u) {
                     double v = ghat.fhat(u);
                     return v * v;
                   },
                   0.0, alpha, breaks, opts)
                   .value;
  if (!(den > 1e-14)) fail(ErrorKind::kDivisionDegenerate, "\\int ghat^2 vanishes");
  return std::sqrt(num / den) / (2.0 * kPi);
}

TestFunction smallzero_testfn(double R, double beta) { return TestFunction::smallzero(R, beta); }

namespace {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : s_(text) {}

  TestFunction parse_all() {
    TestFunction f = parse();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected trailing text");
    return f;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    std::ostringstream os;
    os << what << " at position " << pos_ << " in '" << s_
       << "'; valid kinds: zero, box:a, triangle:alpha, coswin:R, smallzero:R=..,beta=.., "
          "conv(f,g), scaled(s,f)";
    fail(ErrorKind::kParse, os.str());
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) error(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '-' || s_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  double number() {
    skip_ws();
    double v = 0.0;
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc()) error("expected a number");
    pos_ += static_cast<std::size_t>(res.ptr - begin);
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      double d = 0.0;
      const char* b2 = s_.data() + pos_;
      auto r2 = std::from_chars(b2, end, d);
      if (r2.ec != std::errc() || d == 0.0) error("bad denominator");
      pos_ += static_cast<std::size_t>(r2.ptr - b2);
      v /= d;
    }
    if (!(v > 0.0) || !std::isfinite(v)) error("parameters must be positive");
    return v;
  }

  TestFunction parse() {
    std::string name = identifier();
    if (name == "zero") return TestFunction::zero();
    if (name == "conv") {
      expect('(');
      TestFunction a = parse();
      expect(',');
      TestFunction b = parse();
      expect(')');
      return TestFunction::convolution(a, b);
    }
    if (name == "scaled") {
      expect('(');
      double s = number();
      expect(',');
      TestFunction inner = parse();
      expect(')');
      return TestFunction::scaled(s, inner);
    }
    if (name == "box" || name == "triangle" || name == "coswin" || name == "cosine-window") {
      expect(':');
      double v = number();
      if (name == "box") return TestFunction::box(v);
      if (name == "triangle") return TestFunction::triangle(v);
      return TestFunction::cosine_window(v);
    }
    if (name == "smallzero") {
      expect(':');
      double R = 0.0;
      double beta = 0.0;
      for (int i = 0; i < 2; ++i) {
        if (i == 1) expect(',');
        std::size_t save = pos_;
        std::string key = identifier();
        if (!key.empty() && consume('=')) {
          if (key == "R") {
            R = number();
          } else if (key == "beta") {
            beta = number();
          } else {
            error("unknown smallzero key '" + key + "'");
          }
        } else {
          pos_ = save;
          (i == 0 ? R : beta) = number();
        }
      }
      if (R == 0.0 || beta == 0.0) error("smallzero needs R and beta");
      return TestFunction::smallzero(R, beta);
    }
    error(name.empty() ? "expected a test function" : "unknown kind '" + name + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

TestFunction parse_test_function(std::string_view descriptor) {
  return DescriptorParser(descriptor).parse_all();
}

}  // namespace mockgauss
