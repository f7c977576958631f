#include "mockgauss/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <unistd.h>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "mockgauss/error.hpp"
#include "mockgauss/parallel.hpp"
#include "mockgauss/special.hpp"
#include "mockgauss/version.hpp"

namespace mockgauss {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kCacheFormat = "z1";

// The Hardy function of chi along sign * t, t > 0. sign = -1 walks down the
// negative half of the critical line.
struct HardyFunction {
  const DirichletCharacter& chi;
  double sign;
  double phase_shift;

  double operator()(double t) const {
    double tt = sign * t;
    double phase = hardy_theta(chi.modulus(), chi.parity(), tt) - phase_shift;
    cdouble z = std::polar(1.0, phase) * l_eval(chi, cdouble(0.5, tt));
    if (std::abs(z.imag()) > kPhaseTolerance) {
      fail(ErrorKind::kPhaseResidualExceeded, "Hardy function off the real axis",
           std::abs(z.imag()), kPhaseTolerance);
    }
    return z.real();
  }
};

std::vector<double> make_grid(double T, double step) {
  int n = static_cast<int>(std::ceil(T / step));
  std::vector<double> t(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) t[static_cast<std::size_t>(i)] = T * i / n;
  return t;
}

double refine_root(const HardyFunction& z, double a, double b, double fa, double fb, double tol) {
  auto tolerance = [tol](double lo, double hi) { return std::abs(hi - lo) <= tol; };
  std::uintmax_t iters = 200;
  auto r = boost::math::tools::toms748_solve(z, a, b, fa, fb, tolerance, iters);
  return 0.5 * (r.first + r.second);
}

// Zeros from a precomputed grid of Hardy values; returns nullopt when the
// count fails the audit.
std::optional<ZeroList> zeros_from_grid(const DirichletCharacter& chi, double sign, double T,
                                        const std::vector<double>& t, const std::vector<double>& z,
                                        double step, const ZeroSearchOptions& opts) {
  HardyFunction hz{chi, sign, 0.5 * std::arg(root_number(chi))};
  std::vector<double> roots;
  const std::size_t n = t.size();
  for (std::size_t i = 1; i < n; ++i) {
    double a = t[i - 1];
    double b = t[i];
    double fa = z[i - 1];
    double fb = z[i];
    if (fb == 0.0) {
      if (b < T) roots.push_back(b);
      continue;
    }
    if (fa == 0.0) continue;
    if ((fa < 0) != (fb < 0)) {
      roots.push_back(refine_root(hz, a, b, fa, fb, opts.bracket_tol));
    }
  }
  // Same-sign dips of |Z| may hide a close pair of zeros.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    double s = z[i] > 0 ? 1.0 : -1.0;
    if (z[i - 1] * s <= 0 || z[i + 1] * s <= 0) continue;
    if (!(std::abs(z[i]) < std::abs(z[i - 1]) && std::abs(z[i]) < std::abs(z[i + 1]))) continue;
    auto signed_z = [&](double x) { return s * hz(x); };
    std::uintmax_t iters = 100;
    auto m = boost::math::tools::brent_find_minima(signed_z, t[i - 1], t[i + 1], 40, iters);
    if (m.second < 0.0) {
      double fm = s * m.second;
      roots.push_back(refine_root(hz, t[i - 1], m.first, z[i - 1], fm, opts.bracket_tol));
      roots.push_back(refine_root(hz, m.first, t[i + 1], fm, z[i + 1], opts.bracket_tol));
    }
  }
  std::sort(roots.begin(), roots.end());
  ZeroList out;
  out.q = chi.modulus();
  out.char_index = chi.index();
  out.parity = chi.parity();
  out.height = T;
  out.grid_step = step;
  out.expected_count = expected_zero_count(out.q, out.parity, T);
  if (std::abs(static_cast<double>(roots.size()) - out.expected_count) > opts.audit_threshold) {
    return std::nullopt;
  }
  for (double g : roots) {
    double residual = std::abs(l_eval(chi, cdouble(0.5, sign * g)));
    if (residual > opts.residual_tol) {
      fail(ErrorKind::kAccuracyNotAchieved, "zero residual above tolerance at gamma = " + std::to_string(g),
           residual, opts.residual_tol);
    }
    out.ordinates.push_back(g);
    out.scaled.push_back(scale_ordinate(out.q, g));
    out.residuals.push_back(residual);
  }
  return out;
}

ZeroList search(const DirichletCharacter& chi, double sign, double T, const ZeroSearchOptions& opts) {
  if (chi.is_trivial()) fail(ErrorKind::kPreconditionViolation, "zero search needs chi != chi_0");
  if (!(T > 0.0) || T > kMaxSearchHeight) {
    fail(ErrorKind::kPreconditionViolation, "search height must be in (0, 200]");
  }
  double step = opts.grid_step > 0.0 ? opts.grid_step : default_grid_step(chi.modulus(), T);
  HardyFunction hz{chi, sign, 0.5 * std::arg(root_number(chi))};
  double last_count = 0.0;
  double expected = expected_zero_count(chi.modulus(), chi.parity(), T);
  for (int attempt = 0; attempt <= opts.max_refinements; ++attempt) {
    std::vector<double> t = make_grid(T, step);
    std::vector<double> z(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) z[i] = hz(t[i]);
    auto found = zeros_from_grid(chi, sign, T, t, z, step, opts);
    if (found) return *found;
    last_count = 0.0;
    for (std::size_t i = 1; i < z.size(); ++i) last_count += (z[i - 1] < 0) != (z[i] < 0);
    step *= 0.5;
  }
  std::ostringstream os;
  os << "q=" << chi.modulus() << " k=" << chi.index() << " T=" << T
     << ": sign changes " << last_count << " vs smooth count " << expected;
  fail(ErrorKind::kMissedZeroSuspected, os.str(), std::abs(last_count - expected),
       opts.audit_threshold);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string cache_key(std::uint64_t q, std::uint64_t k, double T, const ZeroSearchOptions& opts) {
  double step = opts.grid_step > 0.0 ? opts.grid_step : default_grid_step(q, T);
  std::ostringstream os;
  os << "mockgauss-zeros " << kVersion << " " << kCacheFormat << " q=" << q << " k=" << k
     << " T=" << format_g17(T) << " grid=" << format_g17(step)
     << " tol=" << format_g17(opts.bracket_tol) << " audit=" << format_g17(opts.audit_threshold);
  return os.str();
}

}  // namespace

double default_grid_step(std::uint64_t q, double T) {
  double denom = std::log(static_cast<double>(q) * std::max(T, 1.0));
  return std::min(0.05, 2.0 * kPi / denom);
}

double expected_zero_count(std::uint64_t q, int parity, double T) {
  return (hardy_theta(q, parity, T) - hardy_theta(q, parity, 0.0)) / kPi;
}

double zero_count_asymptotic(std::uint64_t q, double T) {
  return T / (2.0 * kPi) * std::log(static_cast<double>(q) * T / (2.0 * kPi * std::numbers::e));
}

ZeroList find_zeros(const DirichletCharacter& chi, double T, const ZeroSearchOptions& opts) {
  return search(chi, 1.0, T, opts);
}

ZeroList find_negative_zeros(const DirichletCharacter& chi, double T, const ZeroSearchOptions& opts) {
  return search(chi, -1.0, T, opts);
}

ZeroCache::ZeroCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

ZeroCache ZeroCache::from_environment() {
  if (const char* d = std::getenv("MOCKGAUSS_CACHE_DIR"); d && *d) return ZeroCache(d);
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) {
    return ZeroCache(std::filesystem::path(x) / "mockgauss");
  }
  if (const char* h = std::getenv("HOME"); h && *h) {
    return ZeroCache(std::filesystem::path(h) / ".cache" / "mockgauss");
  }
  return ZeroCache(".mockgauss-cache");
}

std::filesystem::path ZeroCache::path_for(std::uint64_t q, std::uint64_t k, double T,
                                          const ZeroSearchOptions& opts) const {
  char name[64];
  std::snprintf(name, sizeof(name), "zeros-%016llx.csv",
                static_cast<unsigned long long>(fnv1a(cache_key(q, k, T, opts))));
  return dir_ / name;
}

std::optional<ZeroList> ZeroCache::load(std::uint64_t q, std::uint64_t k, double T,
                                        const ZeroSearchOptions& opts) const {
  std::ifstream in(path_for(q, k, T, opts));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != "# " + cache_key(q, k, T, opts)) return std::nullopt;
  ZeroList z;
  z.q = q;
  z.char_index = k;
  z.height = T;
  if (!std::getline(in, line)) return std::nullopt;
  {
    std::istringstream meta(line);
    std::string hash;
    meta >> hash >> z.parity >> z.grid_step >> z.expected_count;
    if (hash != "#" || !meta) return std::nullopt;
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    double g = 0.0;
    double r = 0.0;
    if (!(row >> g >> r)) return std::nullopt;
    z.ordinates.push_back(g);
    z.scaled.push_back(scale_ordinate(q, g));
    z.residuals.push_back(r);
  }
  return z;
}

void ZeroCache::store(const ZeroList& zeros, const ZeroSearchOptions& opts) const {
  std::filesystem::create_directories(dir_);
  std::filesystem::path target = path_for(zeros.q, zeros.char_index, zeros.height, opts);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    out << "# " << cache_key(zeros.q, zeros.char_index, zeros.height, opts) << "\n";
    out << "# " << zeros.parity << " " << format_g17(zeros.grid_step) << " "
        << format_g17(zeros.expected_count) << "\n";
    for (std::size_t j = 0; j < zeros.size(); ++j) {
      out << format_g17(zeros.ordinates[j]) << " " << format_g17(zeros.residuals[j]) << "\n";
    }
    if (!out) fail(ErrorKind::kPreconditionViolation, "cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::vector<ZeroList> find_zeros_family(const DirichletGroup& group, double T,
                                        const ZeroSearchOptions& opts, const ZeroCache* cache,
                                        int workers) {
  const std::uint64_t q = group.modulus();
  if (!(T > 0.0) || T > kMaxSearchHeight) {
    fail(ErrorKind::kPreconditionViolation, "search height must be in (0, 200]");
  }
  std::vector<DirichletCharacter> chars = group.nontrivial_characters();
  std::vector<std::optional<ZeroList>> result(chars.size());
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (cache) result[i] = cache->load(q, chars[i].index(), T, opts);
    if (!result[i]) missing.push_back(i);
  }
  if (!missing.empty()) {
    const double step = opts.grid_step > 0.0 ? opts.grid_step : default_grid_step(q, T);
    const std::vector<double> t = make_grid(T, step);
    std::vector<double> shifts(missing.size());
    for (std::size_t m = 0; m < missing.size(); ++m) {
      shifts[m] = 0.5 * std::arg(root_number(chars[missing[m]]));
    }
    std::vector<std::vector<double>> z(missing.size(), std::vector<double>(t.size()));
    parallel_for(t.size(), workers, [&](std::size_t i) {
      HurwitzBank bank(q, cdouble(0.5, t[i]));
      double theta[2] = {hardy_theta(q, 0, t[i]), hardy_theta(q, 1, t[i])};
      for (std::size_t m = 0; m < missing.size(); ++m) {
        const DirichletCharacter& chi = chars[missing[m]];
        cdouble v = std::polar(1.0, theta[chi.parity()] - shifts[m]) * bank.l_value(chi).value;
        if (std::abs(v.imag()) > kPhaseTolerance) {
          fail(ErrorKind::kPhaseResidualExceeded, "Hardy function off the real axis",
               std::abs(v.imag()), kPhaseTolerance);
        }
        z[m][i] = v.real();
      }
    });
    parallel_for(missing.size(), workers, [&](std::size_t m) {
      const DirichletCharacter& chi = chars[missing[m]];
      auto found = zeros_from_grid(chi, 1.0, T, t, z[m], step, opts);
      if (!found) {
        ZeroSearchOptions finer = opts;
        finer.grid_step = 0.5 * step;
        found = find_zeros(chi, T, finer);
        found->grid_step = step;
      }
      result[missing[m]] = std::move(found);
      if (cache) cache->store(*result[missing[m]], opts);
    });
  }
  std::vector<ZeroList> out;
  out.reserve(result.size());
  for (auto& r : result) out.push_back(std::move(*r));
  return out;
}

}  // namespace mockgauss
