#include "mockgauss/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mockgauss/error.hpp"
#include "mockgauss/parallel.hpp"
#include "mockgauss/quadrature.hpp"

namespace mockgauss {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxEigenRetries = 4;

double wrap_angle(double a) { return a <= -kPi ? a + 2.0 * kPi : a; }

// Batch layout shared by the Monte-Carlo drivers: batch b draws its samples
// from RandomStream(seed, b), so results do not depend on the worker count.
struct BatchPlan {
  int batches;
  std::vector<long long> sizes;
};

BatchPlan plan_batches(long long samples, int requested) {
  int b = static_cast<int>(std::min<long long>(requested, samples));
  BatchPlan plan{b, std::vector<long long>(static_cast<std::size_t>(b), samples / b)};
  for (long long i = 0; i < samples % b; ++i) ++plan.sizes[static_cast<std::size_t>(i)];
  return plan;
}

double batch_std_error(const std::vector<double>& per_batch, double overall) {
  const std::size_t B = per_batch.size();
  if (B < 2) return 0.0;
  CompensatedSum ss;
  for (std::size_t b = 0; b < B; ++b) {
    double d = per_batch[b] - overall;
    ss += d * d;
  }
  return std::sqrt(ss.value() / (static_cast<double>(B) * static_cast<double>(B - 1)));
}

std::vector<double> trace_weights(const TestFunction& f, int N) {
  int cutoff = trace_cutoff(f, N);
  std::vector<double> w(static_cast<std::size_t>(cutoff) + 1);
  for (int n = 0; n <= cutoff; ++n) w[static_cast<std::size_t>(n)] = f.fhat(static_cast<double>(n) / N) / N;
  return w;
}

double zf_weighted(std::span<const cdouble> tr, const std::vector<double>& w) {
  CompensatedSum s;
  s += w[0] * tr[0].real();
  for (std::size_t n = 1; n < w.size(); ++n) s += 2.0 * w[n] * tr[n].real();
  return s.value();
}

}  // namespace

EigenphaseSample sample_cue(int N, RandomStream& stream) {
  require(N >= 1, ErrorKind::kPreconditionViolation, "sample_cue needs N >= 1");
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (int attempt = 0; attempt < kMaxEigenRetries; ++attempt) {
    Eigen::MatrixXcd z(N, N);
    for (int j = 0; j < N; ++j) {
      for (int i = 0; i < N; ++i) {
        double re = stream.normal();
        double im = stream.normal();
        z(i, j) = cdouble(re, im) * inv_sqrt2;
      }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd& r = qr.matrixQR();
    for (int j = 0; j < N; ++j) {
      cdouble d = r(j, j);
      double mag = std::abs(d);
      if (mag > 0.0) q.col(j) *= d / mag;
    }
    double residual =
        (q.adjoint() * q - Eigen::MatrixXcd::Identity(N, N)).cwiseAbs().maxCoeff();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(q, false);
    if (es.info() != Eigen::Success || residual > 1e-10) continue;
    EigenphaseSample s;
    s.dimension = N;
    s.seed_tag = stream.tag();
    s.unitarity_residual = residual;
    s.angles.resize(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) s.angles[static_cast<std::size_t>(j)] = wrap_angle(std::arg(es.eigenvalues()(j)));
    std::sort(s.angles.begin(), s.angles.end());
    return s;
  }
  fail(ErrorKind::kEigenSolverNonconvergence, "Haar sample failed after retries");
}

std::vector<cdouble> traces(const EigenphaseSample& s, int n_max) {
  require(n_max >= 0, ErrorKind::kPreconditionViolation, "n_max must be nonnegative");
  std::vector<cdouble> tr(static_cast<std::size_t>(n_max) + 1, 0.0);
  tr[0] = static_cast<double>(s.angles.size());
  for (double theta : s.angles) {
    cdouble z = std::polar(1.0, theta);
    cdouble w = 1.0;
    for (int n = 1; n <= n_max; ++n) {
      w *= z;
      tr[static_cast<std::size_t>(n)] += w;
    }
  }
  return tr;
}

std::vector<cdouble> sample_verblunsky(int N, RandomStream& stream) {
  require(N >= 1, ErrorKind::kPreconditionViolation, "sample_verblunsky needs N >= 1");
  std::vector<cdouble> alpha(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) {
    double r = 1.0;
    if (k < N - 1) {
      double b = static_cast<double>(N - k - 1);
      // |alpha|^2 = 1 - u^{1/b} ~ Beta(1, b)
      r = std::sqrt(-std::expm1(std::log(stream.uniform()) / b));
    }
    double phase = 2.0 * kPi * stream.uniform();
    alpha[static_cast<std::size_t>(k)] = std::polar(r, phase);
  }
  return alpha;
}

std::vector<cdouble> szego_polynomial(std::span<const cdouble> alpha) {
  std::vector<cdouble> phi{1.0};
  std::vector<cdouble> next;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    std::size_t d = phi.size() - 1;
    next.assign(d + 2, 0.0);
    cdouble ca = std::conj(alpha[k]);
    for (std::size_t j = 0; j <= d; ++j) {
      next[j + 1] += phi[j];
      next[j] -= ca * std::conj(phi[d - j]);
    }
    phi.swap(next);
  }
  return phi;
}

std::vector<cdouble> power_sums(std::span<const cdouble> monic_coeffs, int n_max) {
  const int N = static_cast<int>(monic_coeffs.size()) - 1;
  std::vector<cdouble> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = static_cast<double>(N);
  for (int n = 1; n <= n_max; ++n) {
    cdouble s = 0.0;
    int top = std::min(n - 1, N);
    for (int k = 1; k <= top; ++k) {
      s += monic_coeffs[static_cast<std::size_t>(N - k)] * p[static_cast<std::size_t>(n - k)];
    }
    if (n <= N) s += static_cast<double>(n) * monic_coeffs[static_cast<std::size_t>(N - n)];
    p[static_cast<std::size_t>(n)] = -s;
  }
  return p;
}

Eigen::MatrixXcd cmv_matrix(std::span<const cdouble> alpha) {
  const int N = static_cast<int>(alpha.size());
  auto theta = [&](int k) {
    Eigen::Matrix2cd t;
    cdouble a = alpha[static_cast<std::size_t>(k)];
    double rho = std::sqrt(std::max(0.0, 1.0 - std::norm(a)));
    t << std::conj(a), rho, rho, -a;
    return t;
  };
  Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(N, N);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(N, N);
  for (int k = 0; k < N; k += 2) {
    if (k + 1 < N) {
      l.block(k, k, 2, 2) = theta(k);
    } else {
      l(k, k) = std::conj(alpha[static_cast<std::size_t>(k)]);
    }
  }
  m(0, 0) = 1.0;
  for (int k = 1; k < N; k += 2) {
    if (k + 1 < N) {
      m.block(k, k, 2, 2) = theta(k);
    } else {
      m(k, k) = std::conj(alpha[static_cast<std::size_t>(k)]);
    }
  }
  return l * m;
}

std::vector<cdouble> sample_cue_traces(int N, int n_max, RandomStream& stream) {
  std::vector<cdouble> alpha = sample_verblunsky(N, stream);
  std::vector<cdouble> phi = szego_polynomial(alpha);
  return power_sums(phi, n_max);
}

int trace_cutoff(const TestFunction& f, int N) {
  return static_cast<int>(std::ceil(f.support_halfwidth() * N));
}

double zf_eval(const EigenphaseSample& s, const TestFunction& f) {
  const int N = s.dimension;
  std::vector<double> w = trace_weights(f, N);
  const int cutoff = static_cast<int>(w.size()) - 1;
  // Positive and negative powers are accumulated separately so that the
  // imaginary part is a genuine consistency check.
  cdouble total = w[0] * static_cast<double>(N);
  for (double theta : s.angles) {
    cdouble z = std::polar(1.0, theta);
    cdouble zc = std::polar(1.0, -theta);
    cdouble up = 1.0;
    cdouble down = 1.0;
    for (int n = 1; n <= cutoff; ++n) {
      up *= z;
      down *= zc;
      total += w[static_cast<std::size_t>(n)] * (up + down);
    }
  }
  double scale = std::max(1.0, std::abs(total.real()));
  if (std::abs(total.imag()) > 1e-10 * scale) {
    fail(ErrorKind::kSymmetryViolation, "Z_f has a non-negligible imaginary part",
         std::abs(total.imag()), 1e-10 * scale);
  }
  return total.real();
}

double zf_from_traces(std::span<const cdouble> tr, int N, const TestFunction& f) {
  std::vector<double> w = trace_weights(f, N);
  require(tr.size() >= w.size(), ErrorKind::kPreconditionViolation,
          "not enough traces for the support of fhat");
  return zf_weighted(tr, w);
}

double pair_expectation(int n, int m, int N) {
  if (n == 0 && m == 0) return static_cast<double>(N) * N;
  if (n == -m) return static_cast<double>(std::min(std::abs(n), N));
  return 0.0;
}

double ds_expectation(std::span<const int> a, std::span<const int> b, int N) {
  auto trimmed = [](std::span<const int> v) {
    std::vector<int> out(v.begin(), v.end());
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  };
  std::vector<int> ta = trimmed(a);
  std::vector<int> tb = trimmed(b);
  long long wa = 0;
  long long wb = 0;
  for (std::size_t j = 0; j < ta.size(); ++j) {
    require(ta[j] >= 0, ErrorKind::kPreconditionViolation, "multiplicities must be nonnegative");
    wa += static_cast<long long>(j + 1) * ta[j];
  }
  for (std::size_t j = 0; j < tb.size(); ++j) {
    require(tb[j] >= 0, ErrorKind::kPreconditionViolation, "multiplicities must be nonnegative");
    wb += static_cast<long long>(j + 1) * tb[j];
  }
  if (N < std::max(wa, wb)) {
    fail(ErrorKind::kPreconditionViolation,
         "N must be at least max(sum j a_j, sum j b_j) = " + std::to_string(std::max(wa, wb)));
  }
  if (ta != tb) return 0.0;
  double prod = 1.0;
  for (std::size_t j = 0; j < ta.size(); ++j) {
    double jj = static_cast<double>(j + 1);
    for (int i = 1; i <= ta[j]; ++i) prod *= jj * i;
  }
  return prod;
}

double zf_variance_exact(const TestFunction& f, int N) {
  const int cutoff = trace_cutoff(f, N);
  CompensatedSum s;
  for (int n = 1; n <= cutoff; ++n) {
    double v = f.fhat(static_cast<double>(n) / N);
    s += v * v * std::min(n, N);
  }
  return 2.0 * s.value() / (static_cast<double>(N) * N);
}

std::string to_string(Sampler s) { return s == Sampler::kQr ? "qr" : "verblunsky"; }

Sampler parse_sampler(const std::string& name) {
  if (name == "qr") return Sampler::kQr;
  if (name == "verblunsky") return Sampler::kVerblunsky;
  fail(ErrorKind::kParse, "unknown sampler '" + name + "' (expected qr or verblunsky)");
}

double gaussian_moment(int m, double sigma_sq) {
  if (m % 2 == 1) return 0.0;
  double v = 1.0;
  for (int k = m - 1; k > 0; k -= 2) v *= k;
  return v * std::pow(sigma_sq, m / 2);
}

MomentReport mc_moments(int N, const TestFunction& f, long long samples, std::uint64_t seed,
                        int m_max, const McOptions& opts) {
  require(N >= 1, ErrorKind::kPreconditionViolation, "dimension must be positive");
  require(samples >= 100, ErrorKind::kPreconditionViolation, "mc_moments needs at least 100 samples");
  require(m_max >= 1 && m_max <= 6, ErrorKind::kPreconditionViolation, "m_max must be in 1..6");
  require(opts.batches >= 2, ErrorKind::kPreconditionViolation, "need at least two batches");

  const BatchPlan plan = plan_batches(samples, opts.batches);
  const std::vector<double> w = trace_weights(f, N);
  const int cutoff = static_cast<int>(w.size()) - 1;

  std::vector<std::vector<double>> values(static_cast<std::size_t>(plan.batches));
  parallel_for(static_cast<std::size_t>(plan.batches), opts.workers, [&](std::size_t b) {
    RandomStream stream(seed, b);
    std::vector<double>& out = values[b];
    out.reserve(static_cast<std::size_t>(plan.sizes[b]));
    for (long long i = 0; i < plan.sizes[b]; ++i) {
      if (opts.sampler == Sampler::kQr) {
        EigenphaseSample s = sample_cue(N, stream);
        out.push_back(zf_weighted(traces(s, cutoff), w));
      } else {
        out.push_back(zf_weighted(sample_cue_traces(N, cutoff, stream), w));
      }
    }
  });

  CompensatedSum total;
  for (const auto& v : values) {
    for (double z : v) total += z;
  }
  const double mean = total.value() / static_cast<double>(samples);

  const std::size_t B = static_cast<std::size_t>(plan.batches);
  MomentReport rep;
  rep.dimension = N;
  rep.samples = samples;
  rep.seed = seed;
  rep.m_max = m_max;
  rep.batches = plan.batches;
  rep.sampler = to_string(opts.sampler);
  rep.fn = f.descriptor();
  rep.sigma_sq = sigma_sq(f);
  rep.finite_n_variance = zf_variance_exact(f, N);

  const double alpha = f.support_halfwidth();
  for (int m = 1; m <= m_max; ++m) {
    std::vector<double> central(B);
    std::vector<double> raw(B);
    CompensatedSum central_all;
    CompensatedSum raw_all;
    for (std::size_t b = 0; b < B; ++b) {
      CompensatedSum c;
      CompensatedSum r;
      for (double z : values[b]) {
        c += m == 1 ? z : std::pow(z - mean, m);
        r += std::pow(z, m);
      }
      double n_b = static_cast<double>(plan.sizes[b]);
      central[b] = c.value() / n_b;
      raw[b] = r.value() / n_b;
      central_all += c.value();
      raw_all += r.value();
    }
    MomentEstimate e;
    e.m = m;
    e.estimate = m == 1 ? mean : central_all.value() / static_cast<double>(samples);
    e.std_error = batch_std_error(central, e.estimate);
    e.raw = raw_all.value() / static_cast<double>(samples);
    e.raw_std_error = batch_std_error(raw, e.raw);
    if (m == 1) {
      e.prediction = f.fhat(0.0);
      e.prediction_source = "mean";
    } else if (m == 2) {
      e.prediction = rep.sigma_sq;
      e.prediction_source = "variance-limit";
    } else if (alpha * m <= 2.0) {
      e.prediction = gaussian_moment(m, rep.sigma_sq);
      e.prediction_source = "gaussian";
    } else {
      e.prediction_source = "no-prediction";
    }
    rep.moments.push_back(e);
  }
  return rep;
}

TraceMoment mc_trace_moment(int N, std::span<const int> exponents, long long samples,
                            std::uint64_t seed, const McOptions& opts) {
  require(samples >= 2, ErrorKind::kPreconditionViolation, "need at least two samples");
  int n_max = 0;
  for (int e : exponents) n_max = std::max(n_max, std::abs(e));
  const BatchPlan plan = plan_batches(samples, opts.batches);
  const std::size_t B = static_cast<std::size_t>(plan.batches);
  std::vector<cdouble> sums(B);
  parallel_for(B, opts.workers, [&](std::size_t b) {
    RandomStream stream(seed, b);
    CompensatedSum re;
    CompensatedSum im;
    for (long long i = 0; i < plan.sizes[b]; ++i) {
      std::vector<cdouble> tr;
      if (opts.sampler == Sampler::kQr) {
        tr = traces(sample_cue(N, stream), n_max);
      } else {
        tr = sample_cue_traces(N, n_max, stream);
      }
      cdouble prod = 1.0;
      for (int e : exponents) {
        cdouble t = tr[static_cast<std::size_t>(std::abs(e))];
        prod *= e >= 0 ? t : std::conj(t);
      }
      re += prod.real();
      im += prod.imag();
    }
    sums[b] = cdouble(re.value(), im.value());
  });
  std::vector<double> mre(B);
  std::vector<double> mim(B);
  CompensatedSum tre;
  CompensatedSum tim;
  for (std::size_t b = 0; b < B; ++b) {
    double n_b = static_cast<double>(plan.sizes[b]);
    mre[b] = sums[b].real() / n_b;
    mim[b] = sums[b].imag() / n_b;
    tre += sums[b].real();
    tim += sums[b].imag();
  }
  TraceMoment out;
  out.mean = cdouble(tre.value(), tim.value()) / static_cast<double>(samples);
  out.std_error_re = batch_std_error(mre, out.mean.real());
  out.std_error_im = batch_std_error(mim, out.mean.imag());
  return out;
}

}  // namespace mockgauss
