#include "mockgauss/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "mockgauss/error.hpp"

namespace mockgauss {
namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double l1;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate(const std::function<double(double)>& f, double a, double b) {
  double err = 0.0;
  double l1 = 0.0;
  double v = Rule::integrate(f, a, b, 0, 0.0, &err, &l1);
  return {a, b, v, err, l1};
}

}  // namespace

std::vector<double> interior_breakpoints(std::span<const double> points, double a, double b) {
  std::vector<double> out;
  for (double p : points) {
    if (p > a && p < b) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double x, double y) { return std::abs(x - y) <= 1e-15 * (1 + std::abs(x)); }),
            out.end());
  return out;
}

QuadResult integrate_unchecked(const std::function<double(double)>& f, double a, double b,
                               std::span<const double> breakpoints, const QuadOptions& opts) {
  if (a == b) return {};
  if (a > b) {
    QuadResult r = integrate_unchecked(f, b, a, breakpoints, opts);
    r.value = -r.value;
    return r;
  }
  std::vector<double> edges{a};
  for (double p : interior_breakpoints(breakpoints, a, b)) edges.push_back(p);
  edges.push_back(b);

  std::priority_queue<Panel> heap;
  double total_err = 0.0;
  double total_l1 = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = evaluate(f, edges[i], edges[i + 1]);
    total_err += p.error;
    total_l1 += p.l1;
    heap.push(p);
  }
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  while (static_cast<int>(heap.size()) < opts.max_intervals) {
    double floor = 50.0 * kEps * total_l1;
    if (total_err <= std::max(opts.abs_tol, floor)) break;
    Panel worst = heap.top();
    double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    heap.pop();
    Panel left = evaluate(f, worst.a, mid);
    Panel right = evaluate(f, mid, worst.b);
    total_err += left.error + right.error - worst.error;
    total_l1 += left.l1 + right.l1 - worst.l1;
    heap.push(left);
    heap.push(right);
  }
  QuadResult result;
  result.intervals = static_cast<int>(heap.size());
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  // Sum in position order so the result does not depend on heap internals.
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  CompensatedSum v;
  CompensatedSum e;
  CompensatedSum l1;
  for (const Panel& p : panels) {
    v += p.value;
    e += p.error;
    l1 += p.l1;
  }
  result.value = v.value();
  result.l1 = l1.value();
  result.error = e.value();
  return result;
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     std::span<const double> breakpoints, const QuadOptions& opts) {
  QuadResult r = integrate_unchecked(f, a, b, breakpoints, opts);
  double floor = 50.0 * std::numeric_limits<double>::epsilon() * r.l1;
  if (!(r.error <= std::max(opts.abs_tol, floor)) || !std::isfinite(r.value)) {
    std::ostringstream os;
    os << "integral over [" << a << ", " << b << "] reached error " << r.error << " after "
       << r.intervals << " panels, tolerance " << opts.abs_tol;
    fail(ErrorKind::kQuadratureNonconvergence, os.str(), r.error, opts.abs_tol);
  }
  return r;
}

QuadResult integrate_to_infinity(const std::function<double(double)>& f, double Y,
                                 const QuadOptions& opts) {
  auto integrand = [&](double s) {
    // Below this the contribution of an integrable envelope is far under any tolerance.
    if (s < 1e-100) return 0.0;
    const double x = Y / s;
    return f(x) * (x / s);
  };
  return integrate_unchecked(integrand, 0.0, 1.0, {}, opts);
}

}  // namespace mockgauss
