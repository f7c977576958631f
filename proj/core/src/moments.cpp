#include "mockgauss/moments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <Eigen/Dense>

#include "fftw_support.hpp"
#include "mockgauss/error.hpp"
#include "mockgauss/partitions.hpp"
#include "mockgauss/quadrature.hpp"

namespace mockgauss {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxLatticePoints2 = 400000;
constexpr int kMaxLatticePoints3 = 12000;

// |f(x)|^lambda <= A^lambda (1 + |x|)^{-p}, p = lambda (1 + delta).
struct Envelope {
  double A;
  double p;
  double operator()(double x) const { return A * std::pow(1.0 + std::abs(x), -p); }
};

Envelope envelope(const TestFunction& f, int lambda) {
  return {std::pow(f.decay_constant(), lambda), lambda * (1.0 + f.decay_exponent())};
}

// \int_Y^inf g(x) dx for a decreasing, integrable bound g.
double tail_integral(const std::function<double(double)>& g, double Y) {
  QuadOptions opts;
  opts.abs_tol = 1e-16;
  opts.max_intervals = 2000;
  QuadResult r = integrate_to_infinity(g, Y, opts);
  return r.value + r.error;
}

// Lattice spacing and truncation shared by the connected cycle integrals.
struct Lattice {
  double h;
  double X;
  std::vector<double> x;
};

Lattice make_lattice(double h, double X) {
  int k = static_cast<int>(std::floor(X / h));
  Lattice lat{h, X, {}};
  lat.x.reserve(static_cast<std::size_t>(2 * k + 1));
  for (int i = -k; i <= k; ++i) lat.x.push_back(i * h);
  return lat;
}

// Bound on h sum_k |w(kh)| over the whole lattice.
double lattice_l1_bound(const Envelope& e, double h) { return h * e.A + 2.0 * e.A / (e.p - 1.0); }

// h sum_{|kh| > Y} e(kh)^2.
double lattice_sq_tail(const Envelope& e, double Y, double h) {
  double y = std::max(0.0, Y - h);
  return 2.0 * e.A * e.A * std::pow(1.0 + y, 1.0 - 2.0 * e.p) / (2.0 * e.p - 1.0);
}

class CycleIntegrator {
 public:
  CycleIntegrator(const TestFunction& f, double piece_tol) : f_(f), tol_(piece_tol) {}

  MomentValue one(int lambda) {
    auto key = std::vector<int>{lambda};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    MomentValue v;
    if (lambda == 1) {
      v.value = f_.fhat(0.0);
    } else {
      Envelope e = envelope(f_, lambda);
      // 2 \int_X^inf e = 2 A (1 + X)^{1-p} / (p - 1) <= tol / 10
      double budget = tol_ / 10.0;
      double X = std::pow(2.0 * e.A / ((e.p - 1.0) * budget), 1.0 / (e.p - 1.0)) - 1.0;
      X = std::max(X, 4.0);
      double tail = 2.0 * e.A * std::pow(1.0 + X, 1.0 - e.p) / (e.p - 1.0);
      double alpha = f_.support_halfwidth();
      std::vector<double> breaks;
      double step = 1.0 / alpha;
      for (double b = step; b < X && breaks.size() < 200000; b += step) breaks.push_back(b);
      QuadOptions opts;
      opts.abs_tol = std::max(tol_ / 20.0, 1e-14);
      opts.max_intervals = static_cast<int>(breaks.size()) * 4 + 4000;
      auto integrand = [&](double x) { return std::pow(f_.f(x), lambda); };
      QuadResult r = integrate(integrand, 0.0, X, breaks, opts);
      v.value = 2.0 * r.value;
      v.error = 2.0 * r.error + tail;
    }
    memo_[key] = v;
    return v;
  }

  MomentValue two(int la, int lb) {
    std::vector<int> key{la, lb};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Envelope ea = envelope(f_, la);
    Envelope eb = envelope(f_, lb);
    double alpha = f_.support_halfwidth();
    double band = std::max(la, lb) * alpha + 1.0;
    double h = 0.95 / band;
    double Fa = lattice_l1_bound(ea, h);
    double Fb = lattice_l1_bound(eb, h);
    // J_b(x) <= 4 F_b / (pi^2 x^2) + e_b(|x|/2)
    auto bound = [&](double X) {
      double Y = std::max(X - h, 1.0);
      auto g = [&](const Envelope& outer, const Envelope& inner, double F) {
        return tail_integral(
            [&](double x) { return outer(x) * (4.0 * F / (kPi * kPi * x * x) + inner(0.5 * x)); }, Y);
      };
      return 2.0 * (g(ea, eb, Fb) + g(eb, ea, Fa));
    };
    double X = choose_box(bound, h, kMaxLatticePoints2);
    Lattice lat = make_lattice(h, X);
    double v1 = lattice_two(lat, la, lb);
    Lattice lat2 = make_lattice(0.9 * h, X);
    double v2 = lattice_two(lat2, la, lb);
    MomentValue v{v1, bound(X) + std::abs(v1 - v2)};
    memo_[key] = v;
    return v;
  }

  MomentValue three(int la, int lb, int lc) {
    std::vector<int> key{la, lb, lc};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Envelope e[3] = {envelope(f_, la), envelope(f_, lb), envelope(f_, lc)};
    double alpha = f_.support_halfwidth();
    double band = std::max({la, lb, lc}) * alpha + 1.0;
    double h = 0.95 / band;
    double F[3];
    for (int i = 0; i < 3; ++i) F[i] = lattice_l1_bound(e[i], h);
    // K_b(x) <= 2 F_b / (pi |x|) + sqrt(T2_b(|x|/2))
    auto K = [&](int b, double x) {
      return 2.0 * F[b] / (kPi * x) + std::sqrt(lattice_sq_tail(e[b], 0.5 * x, h));
    };
    auto bound = [&](double X) {
      double Y = std::max(X - h, 1.0);
      double total = 0.0;
      for (int a = 0; a < 3; ++a) {
        int b = (a + 1) % 3;
        int c = (a + 2) % 3;
        total += 2.0 * tail_integral([&](double x) { return e[a](x) * K(b, x) * K(c, x); }, Y);
      }
      return total;
    };
    double X = choose_box(bound, h, kMaxLatticePoints3);
    Lattice lat = make_lattice(h, X);
    double v1 = lattice_three(lat, la, lb, lc);
    Lattice lat2 = make_lattice(0.9 * h, X);
    double v2 = lattice_three(lat2, la, lb, lc);
    MomentValue v{v1, bound(X) + std::abs(v1 - v2)};
    memo_[key] = v;
    return v;
  }

 private:
  double choose_box(const std::function<double(double)>& bound, double h, int max_points) {
    double budget = tol_ / 10.0;
    double X = 8.0;
    const double X_max = 0.5 * max_points * h / 0.9;
    while (bound(X) > budget) {
      X *= 1.5;
      if (X > X_max) {
        fail(ErrorKind::kQuadratureNonconvergence,
             "truncation box for the correlation integral exceeds the lattice budget",
             bound(X_max), budget);
      }
    }
    return X;
  }

  std::vector<double> weights(const Lattice& lat, int lambda) const {
    std::vector<double> w(lat.x.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::pow(f_.f(lat.x[i]), lambda);
    return w;
  }

  static std::vector<double> sinc_row(const Lattice& lat, bool squared) {
    std::vector<double> k(lat.x.size());
    for (std::size_t d = 0; d < k.size(); ++d) {
      const double s = sinc_pi(static_cast<double>(d) * lat.h);
      k[d] = squared ? s * s : s;
    }
    return k;
  }

  // h^2 sum_{i,j} a_i b_j S(x_i - x_j)^2
  double lattice_two(const Lattice& lat, int la, int lb) const {
    std::vector<double> wa = weights(lat, la);
    std::vector<double> wb = la == lb ? wa : weights(lat, lb);
    detail::ToeplitzConvolver conv(sinc_row(lat, true));
    std::vector<double> u;
    conv.apply(wb, u);
    CompensatedSum total;
    for (std::size_t i = 0; i < wa.size(); ++i) total += wa[i] * u[i];
    return total.value() * lat.h * lat.h;
  }

  // h^3 sum_{i,j,k} a_i b_j c_k S(x_i - x_j) S(x_j - x_k) S(x_k - x_i)
  double lattice_three(const Lattice& lat, int la, int lb, int lc) const {
    const std::size_t n = lat.x.size();
    std::vector<double> wa = weights(lat, la);
    std::vector<double> wb = weights(lat, lb);
    std::vector<double> wc = weights(lat, lc);
    const std::vector<double> s = sinc_row(lat, false);
    detail::ToeplitzConvolver conv(s);
    std::vector<double> v(n);
    std::vector<double> u;
    CompensatedSum total;
    for (std::size_t k = 0; k < n; ++k) {
      if (wc[k] == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] = wb[j] * s[j > k ? j - k : k - j];
      conv.apply(v, u);
      double row = 0.0;
      for (std::size_t i = 0; i < n; ++i) row += wa[i] * u[i] * s[i > k ? i - k : k - i];
      total += wc[k] * row;
    }
    return total.value() * lat.h * lat.h * lat.h;
  }

  const TestFunction& f_;
  double tol_;
  std::map<std::vector<int>, MomentValue> memo_;
};

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

double sinc_pi(double x) {
  double t = kPi * x;
  if (std::abs(t) < 1e-4) {
    double t2 = t * t;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sin(t) / t;
}

double sine_kernel_det(std::span<const double> xs) {
  const Eigen::Index r = static_cast<Eigen::Index>(xs.size());
  require(r >= 1 && r <= 4, ErrorKind::kPreconditionViolation, "sine_kernel_det needs 1..4 points");
  Eigen::MatrixXd m(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) {
      m(i, j) = i == j ? 1.0 : sinc_pi(xs[static_cast<std::size_t>(j)] - xs[static_cast<std::size_t>(i)]);
    }
  }
  return m.determinant();
}

double dyson_prelimit_kernel(std::span<const double> xs, int N) {
  const Eigen::Index r = static_cast<Eigen::Index>(xs.size());
  require(r >= 1 && r <= 3, ErrorKind::kPreconditionViolation, "dyson_prelimit_kernel needs 1..3 points");
  require(N >= 2, ErrorKind::kPreconditionViolation, "dyson_prelimit_kernel needs N >= 2");
  auto S = [N](double y) {
    double half = 0.5 * y;
    double den = std::sin(half);
    if (std::abs(den) < 1e-12) {
      // y = 2 pi k: the limit is N (-1)^{(N-1) k}
      long long k = std::llround(y / (2.0 * kPi));
      return ((N - 1) * k) % 2 == 0 ? static_cast<double>(N) : -static_cast<double>(N);
    }
    return std::sin(N * half) / den;
  };
  Eigen::MatrixXd m(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) {
      double d = xs[static_cast<std::size_t>(j)] - xs[static_cast<std::size_t>(i)];
      m(i, j) = i == j ? static_cast<double>(N) : S(2.0 * kPi * d / N);
    }
  }
  return m.determinant() / std::pow(static_cast<double>(N), static_cast<double>(r));
}

namespace {

MomentValue partition_integral_impl(CycleIntegrator& cyc, std::span<const int> lambda) {
  const std::size_t r = lambda.size();
  std::vector<int> perm(r);
  for (std::size_t i = 0; i < r; ++i) perm[i] = static_cast<int>(i);
  CompensatedSum value;
  double error = 0.0;
  do {
    int sign = permutation_sign(perm);
    double term = static_cast<double>(sign);
    double rel_err = 0.0;
    std::vector<bool> seen(r, false);
    for (std::size_t i = 0; i < r; ++i) {
      if (seen[i]) continue;
      std::vector<int> members;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
        seen[j] = true;
        members.push_back(lambda[j]);
      }
      MomentValue c;
      if (members.size() == 1) {
        c = cyc.one(members[0]);
      } else if (members.size() == 2) {
        c = cyc.two(members[0], members[1]);
      } else {
        c = cyc.three(members[0], members[1], members[2]);
      }
      // First-order propagation of relative errors through the product.
      if (c.value != 0.0) {
        rel_err += c.error / std::abs(c.value);
      } else {
        rel_err += c.error > 0 ? 1e300 : 0.0;
      }
      term *= c.value;
    }
    value += term;
    error += std::isfinite(rel_err) && rel_err < 1e299 ? std::abs(term) * rel_err : 0.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {value.value(), error};
}

double piece_tolerance(const TestFunction& f, double tol) {
  double scale = std::max({1.0, std::abs(f.fhat(0.0)), l2_norm_sq(f)});
  return tol / (8.0 * scale * scale);
}

}  // namespace

MomentValue partition_integral(const TestFunction& f, std::span<const int> block_sizes,
                               double tolerance) {
  const std::size_t r = block_sizes.size();
  if (r < 1 || r > 3) fail(ErrorKind::kUnsupportedOrder, "partition integrals limited to r <= 3");
  for (int l : block_sizes) {
    require(l >= 1, ErrorKind::kPreconditionViolation, "block sizes must be positive");
  }
  require(f.admissible() || r == 1, ErrorKind::kPreconditionViolation,
          "correlation integrals need a certified decay exponent");
  require(tolerance > 0.0, ErrorKind::kPreconditionViolation, "tolerance must be positive");
  CycleIntegrator cyc(f, piece_tolerance(f, tolerance));
  return partition_integral_impl(cyc, block_sizes);
}

std::vector<MomentTerm> exact_moment_terms(const TestFunction& f, int m, double tolerance) {
  if (m < 1 || m > 3) fail(ErrorKind::kUnsupportedOrder, "exact moments limited to m <= 3");
  require(tolerance > 0.0, ErrorKind::kPreconditionViolation, "tolerance must be positive");
  double per_term = tolerance / static_cast<double>(bell(m));
  CycleIntegrator cyc(f, piece_tolerance(f, per_term));
  std::vector<MomentTerm> terms;
  for (int r = 1; r <= m; ++r) {
    for_each_partition(m, r, [&](const SetPartition& p) {
      MomentTerm t{p.labels, p.block_sizes, partition_integral_impl(cyc, p.block_sizes)};
      terms.push_back(std::move(t));
    });
  }
  return terms;
}

MomentValue exact_moment(const TestFunction& f, int m, double tolerance) {
  CompensatedSum v;
  double err = 0.0;
  for (const MomentTerm& t : exact_moment_terms(f, m, tolerance)) {
    v += t.value.value;
    err += t.value.error;
  }
  return {v.value(), err};
}

}  // namespace mockgauss
