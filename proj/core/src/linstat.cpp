#include "mockgauss/linstat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

#include "fftw_support.hpp"

#include "mockgauss/arith.hpp"
#include "mockgauss/error.hpp"
#include "mockgauss/quadrature.hpp"
#include "mockgauss/rmt.hpp"
#include "mockgauss/special.hpp"

namespace mockgauss {
namespace {

constexpr double kPi = std::numbers::pi;
// Explicit bound |N(T, chi) - (T/pi) log(qT / 2 pi e)| <= c1 log(qT) + c0 for T >= 1,
// where N counts zeros with |gamma| <= T. The pair is weaker than each of the
// published explicit versions, so it holds under any of them.
constexpr double kCountSlope = 0.9185;
constexpr double kCountOffset = 6.894;
constexpr double kWfBarTailTarget = 1e-10;
constexpr double kWfBarQuadTol = 1e-11;
constexpr int kWfBarMaxPanels = 8192;

// |Re psi(sigma + i y) - log pi| <= log(1 + |y|) + 5.6 for sigma in [1/4, 3/4].
double archimedean_bound(double y) { return std::log1p(std::abs(y)) + 5.6; }

}  // namespace

double zero_tail_bound(std::uint64_t q, const TestFunction& f, double T) {
  if (f.kind() == FnKind::kZero) return 0.0;
  if (!f.admissible()) return std::numeric_limits<double>::infinity();
  const double L = std::log(static_cast<double>(q));
  const double A = f.decay_constant();
  const double p = 1.0 + f.decay_exponent();
  const double Tb = std::max(T, 1.0);
  auto phi = [&](double t) { return A * std::pow(1.0 + L * t / (2.0 * kPi), -p); };
  QuadOptions opts;
  opts.abs_tol = 1e-14;
  auto main = integrate_to_infinity(
      [&](double t) { return phi(t) * std::log(static_cast<double>(q) * t / (2.0 * kPi)) / kPi; }, Tb,
      opts);
  auto inv = integrate_to_infinity([&](double t) { return phi(t) / t; }, Tb, opts);
  double fluct = 2.0 * phi(Tb) * (kCountSlope * std::log(static_cast<double>(q) * Tb) + kCountOffset);
  double below = 0.0;
  if (T < 1.0) {
    // Zeros with |gamma| in (T, 1): at most the count bound at height 1.
    below = phi(T) * (std::max(0.0, std::log(static_cast<double>(q) / (2.0 * kPi * std::numbers::e))) / kPi +
                      kCountSlope * std::log(static_cast<double>(q)) + kCountOffset);
  }
  return main.value + main.error + kCountSlope * (inv.value + inv.error) + fluct + below;
}

BudgetedValue wf_direct(const ZeroList& zeros, const ZeroList& conjugate_zeros, const TestFunction& f,
                        double max_tail) {
  if (zeros.q != conjugate_zeros.q) {
    fail(ErrorKind::kPreconditionViolation, "zero lists belong to different moduli");
  }
  const std::uint64_t order = zeros.q - 1;
  if ((zeros.char_index + conjugate_zeros.char_index) % order != 0) {
    fail(ErrorKind::kPreconditionViolation, "second zero list must belong to the conjugate character");
  }
  CompensatedSum s;
  for (double x : zeros.scaled) s += f.f(x);
  for (double x : conjugate_zeros.scaled) s += f.f(x);
  const double T = std::min(zeros.height, conjugate_zeros.height);
  BudgetedValue out;
  out.value = s.value();
  out.tail_bound = zero_tail_bound(zeros.q, f, T);
  if (!(out.tail_bound <= max_tail)) {
    fail(ErrorKind::kTailBoundExceeded, "zeros above T contribute more than the allowed tail",
         out.tail_bound, max_tail);
  }
  return out;
}

BudgetedValue wf_bar_xspace(std::uint64_t q, int parity, const TestFunction& f) {
  BudgetedValue out;
  if (f.kind() == FnKind::kZero) return out;
  const double L = std::log(static_cast<double>(q));
  const double sigma = 0.25 + 0.5 * parity;
  const double log_pi = std::log(kPi);
  auto G = [&](double x) { return digamma(cdouble(sigma, kPi * x / L)).real() - log_pi; };

  const double alpha = f.support_halfwidth();
  const double A = f.decay_constant();
  const double p = 1.0 + f.decay_exponent();
  auto tail_at = [&](double X) {
    QuadOptions o;
    o.abs_tol = 1e-16;
    auto r = integrate_to_infinity(
        [&](double x) { return A * std::pow(1.0 + x, -p) * archimedean_bound(kPi * x / L); }, X, o);
    return 2.0 * (r.value + r.error) / L;
  };
  const double panel = 0.5 / alpha;
  const double X_max = kWfBarMaxPanels * panel;
  double X = 32.0 / alpha;
  double tail = f.admissible() ? tail_at(X) : std::numeric_limits<double>::infinity();
  while (tail > kWfBarTailTarget && X < X_max) {
    X = std::min(2.0 * X, X_max);
    tail = f.admissible() ? tail_at(X) : tail;
  }
  std::vector<double> breaks;
  for (double b = panel; b < X; b += panel) breaks.push_back(b);
  QuadOptions opts;
  opts.abs_tol = kWfBarQuadTol;
  opts.max_intervals = static_cast<int>(breaks.size()) * 4 + 4000;
  QuadResult r = integrate([&](double x) { return f.f(x) * G(x); }, 0.0, X, breaks, opts);
  out.value = f.fhat(0.0) + 2.0 * r.value / L;
  out.quad_error = 2.0 * r.error / L;
  out.tail_bound = tail;
  return out;
}

BudgetedValue wf_bar(const DirichletCharacter& chi, const TestFunction& f) {
  if (chi.is_trivial()) fail(ErrorKind::kPreconditionViolation, "wf_bar needs chi != chi_0");
  return wf_bar(chi.modulus(), chi.parity(), f);
}

BudgetedValue wf_bar(std::uint64_t q, int parity, const TestFunction& f) {
  BudgetedValue out;
  if (f.kind() == FnKind::kZero) return out;
  const double L = std::log(static_cast<double>(q));
  const double sigma = 0.25 + 0.5 * parity;
  const double f0 = f.fhat(0.0);
  const double V = 2.0 * L * f.support_halfwidth();
  // \int f(x) Re psi(sigma + i pi x / L) dx
  //   = \int_0^V [f0 e^{-v}/v - e^{-sigma v} fhat(v/2L) / (1 - e^{-v})] dv + f0 E1(V)
  auto integrand = [&](double v) {
    const double a = f0 * std::exp(-v) / v;
    const double b = std::exp(-sigma * v) * f.fhat(v / (2.0 * L)) / (-std::expm1(-v));
    return a - b;
  };
  std::vector<double> breaks;
  for (double k : f.kinks()) breaks.push_back(2.0 * L * k);
  breaks.push_back(std::min(1.0, 0.5 * V));
  QuadOptions opts;
  opts.abs_tol = 1e-13;
  const QuadResult r = integrate(integrand, 0.0, V, breaks, opts);
  const double J = r.value + f0 * expint_e1(V);
  out.value = f0 + (J - std::log(kPi) * f0) / L;
  out.quad_error = r.error / L;
  return out;
}

ResidueSums residue_sums(std::uint64_t q, const TestFunction& f) {
  ResidueSums out;
  out.q = q;
  out.log_q = std::log(static_cast<double>(q));
  out.a.assign(q, 0.0);
  const double alpha = f.support_halfwidth();
  if (alpha <= 0.0) return out;
  const double top = std::exp(alpha * out.log_q);
  if (top > static_cast<double>(kSieveLimit) + 1.0) {
    fail(ErrorKind::kSieveRangeOverflow, "q^alpha exceeds the prime-power budget", top,
         static_cast<double>(kSieveLimit));
  }
  const std::uint64_t limit = static_cast<std::uint64_t>(std::floor(top));
  std::vector<CompensatedSum> acc(q);
  CompensatedSum diag;
  std::uint64_t count = 0;
  for_each_prime_power(limit, [&](std::uint64_t n, double log_p) {
    double ln = std::log(static_cast<double>(n));
    double w = log_p / std::sqrt(static_cast<double>(n)) * f.fhat(ln / out.log_q);
    if (w == 0.0) return;
    acc[n % q] += w;
    diag += w * w;
    ++count;
  });
  for (std::uint64_t r = 0; r < q; ++r) out.a[r] = acc[r].value();
  out.diagonal = diag.value();
  out.prime_powers = count;
  return out;
}

double wf_osc(const DirichletCharacter& chi, const ResidueSums& sums) {
  if (chi.is_trivial()) fail(ErrorKind::kPreconditionViolation, "wf_osc needs chi != chi_0");
  if (chi.modulus() != sums.q) fail(ErrorKind::kPreconditionViolation, "residue sums for another modulus");
  CompensatedSum s;
  for (std::uint64_t r = 1; r < sums.q; ++r) {
    if (sums.a[r] == 0.0) continue;
    s += sums.a[r] * chi.value(static_cast<std::int64_t>(r)).real();
  }
  return -2.0 * s.value() / sums.log_q;
}

double wf_osc(const DirichletCharacter& chi, const TestFunction& f) {
  return wf_osc(chi, residue_sums(chi.modulus(), f));
}

std::vector<double> wf_osc_family(const DirichletGroup& group, const ResidueSums& sums) {
  const std::uint64_t q = group.modulus();
  if (sums.q != q) fail(ErrorKind::kPreconditionViolation, "residue sums for another modulus");
  const int n = static_cast<int>(q - 1);
  double* in = fftw_alloc_real(static_cast<std::size_t>(n));
  fftw_complex* out = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
    plan = fftw_plan_dft_r2c_1d(n, in, out, FFTW_ESTIMATE);
  }
  for (int j = 0; j < n; ++j) in[j] = sums.a[group.power_of_generator(static_cast<std::uint64_t>(j))];
  fftw_execute(plan);
  std::vector<double> values(q - 2);
  for (int k = 1; k < n; ++k) {
    int kk = k <= n / 2 ? k : n - k;
    values[static_cast<std::size_t>(k - 1)] = -2.0 * out[kk][0] / sums.log_q;
  }
  {
    std::lock_guard<std::mutex> lock(detail::fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(in);
  fftw_free(out);
  return values;
}

OscMoments osc_moments_exact(const ResidueSums& sums) {
  const std::uint64_t q = sums.q;
  const double L = sums.log_q;
  const double qm2 = static_cast<double>(q - 2);
  CompensatedSum S;
  CompensatedSum P;
  CompensatedSum D;
  for (std::uint64_t r = 1; r < q; ++r) {
    double a = sums.a[r];
    if (a == 0.0) continue;
    S += a;
    D += a * a;
    std::uint64_t inv = powmod(r, q - 2, q);
    P += a * sums.a[inv];
  }
  const double s = S.value();
  const double p = P.value();
  const double d = D.value();
  const double a1 = sums.a[1 % q];
  OscMoments m;
  m.mean = -2.0 / L * (a1 - (s - a1) / qm2);
  const double c = 2.0 / (L * L);
  m.diagonal = c * sums.diagonal;
  m.congruent = c * (d - sums.diagonal);
  m.inverse_pair = c * p;
  m.remainder = -c * (2.0 * s * s - p - d) / qm2;
  m.second_moment = m.diagonal + m.congruent + m.inverse_pair + m.remainder;
  return m;
}

std::string to_string(FamilyMode mode) {
  return mode == FamilyMode::kFromZeros ? "from-zeros" : "osc-only";
}

FamilyMode parse_family_mode(const std::string& name) {
  if (name == "from-zeros") return FamilyMode::kFromZeros;
  if (name == "osc-only") return FamilyMode::kOscOnly;
  fail(ErrorKind::kParse, "unknown mode '" + name + "' (expected from-zeros or osc-only)");
}

FamilyStats family_stats(std::uint64_t q, const TestFunction& f, double T, int m_max, FamilyMode mode,
                         const FamilyOptions& opts) {
  require(m_max >= 1 && m_max <= 6, ErrorKind::kPreconditionViolation, "m_max must be in 1..6");
  DirichletGroup group(q);
  FamilyStats st;
  st.q = q;
  st.fn = f.descriptor();
  st.mode = mode;
  st.height = T;
  st.m_max = m_max;

  ResidueSums sums = residue_sums(q, f);
  st.wf_osc = wf_osc_family(group, sums);
  st.osc = osc_moments_exact(sums);
  const BudgetedValue bar[2] = {wf_bar(q, 0, f), wf_bar(q, 1, f)};
  for (std::uint64_t k = 1; k + 1 < q; ++k) {
    st.char_index.push_back(k);
    st.parity.push_back(static_cast<int>(k % 2));
    st.wf_bar.push_back(bar[k % 2].value);
  }

  if (mode == FamilyMode::kOscOnly) {
    st.values = st.wf_osc;
    st.budgets.assign(st.values.size(), 0.0);
  } else {
    std::vector<ZeroList> zeros = find_zeros_family(group, T, opts.search, opts.cache, opts.workers);
    st.values.resize(zeros.size());
    st.budgets.resize(zeros.size());
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      std::uint64_t k = zeros[i].char_index;
      std::uint64_t kc = (q - 1 - k) % (q - 1);
      BudgetedValue w = wf_direct(zeros[i], zeros[kc - 1], f, opts.max_tail);
      st.values[i] = w.value;
      st.budgets[i] = w.budget();
    }
  }

  const double n = static_cast<double>(st.values.size());
  CompensatedSum mean;
  CompensatedSum second;
  for (double v : st.values) {
    mean += v;
    second += v * v;
  }
  st.mean = mean.value() / n;
  st.second_moment = second.value() / n;
  st.centered.assign(static_cast<std::size_t>(m_max), 0.0);
  for (int m = 2; m <= m_max; ++m) {
    CompensatedSum c;
    for (double v : st.values) c += std::pow(v - st.mean, m);
    st.centered[static_cast<std::size_t>(m - 1)] = c.value() / n;
  }
  st.variance = m_max >= 2 ? st.centered[1] : st.second_moment - st.mean * st.mean;

  const double alpha = f.support_halfwidth();
  const double var_target = variance_target(f);
  if (mode == FamilyMode::kFromZeros) {
    st.targets.push_back({"mean", f.fhat(0.0), alpha <= 2.0, "supp fhat in [-2, 2]; error O(1/log q)"});
    st.targets.push_back({"variance", var_target, alpha <= 1.0, "supp fhat in [-1, 1]; error O(1/sqrt(log q))"});
  } else {
    st.targets.push_back({"mean", 0.0, alpha <= 2.0, "supp fhat in [-2, 2]; error O(1/log q)"});
    st.targets.push_back(
        {"second_moment", var_target, alpha <= 1.0, "supp fhat in [-1, 1]; error O(1/sqrt(log q))"});
  }
  for (int m = 3; m <= m_max; ++m) {
    st.targets.push_back({"centered_moment_" + std::to_string(m), gaussian_moment(m, var_target),
                          m * alpha < 2.0,
                          "m < 2/alpha; limit statement, finite-q error terms dominate"});
  }
  return st;
}

}  // namespace mockgauss
