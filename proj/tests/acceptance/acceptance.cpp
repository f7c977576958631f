#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mockgauss/dirichlet.hpp"
#include "mockgauss/error.hpp"
#include "mockgauss/linstat.hpp"
#include "mockgauss/moments.hpp"
#include "mockgauss/partitions.hpp"
#include "mockgauss/rmt.hpp"
#include "mockgauss/smallzero.hpp"
#include "mockgauss/testfn.hpp"
#include "mockgauss/zeros.hpp"
#include "oracles.hpp"

using namespace mockgauss;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (detail.tellp() > 0) detail << "; ";
    detail << (ok ? "" : "[x] ") << what;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

McOptions parallel_mc() {
  McOptions o;
  o.workers = 0;
  return o;
}

void rmt_mean_variance(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = mc_moments(64, TestFunction::triangle(1.0), 200000, 1, 2, parallel_mc());
  const double secs = seconds_since(t0);
  const auto& m1 = r.moment(1);
  const auto& m2 = r.moment(2);
  o.check(std::abs(m1.estimate - 1.0) <= 3.0 * m1.std_error,
          "mean " + num(m1.estimate) + " vs 1, se " + num(m1.std_error));
  o.check(std::abs(m2.estimate - 1.0 / 6.0) <= std::max(3.0 * m2.std_error, 5e-3),
          "variance " + num(m2.estimate) + " vs 1/6, se " + num(m2.std_error));
  o.check(secs <= 300.0, "runtime " + num(secs) + " s");
}

void mock_gaussian(Outcome& o) {
  const auto f = TestFunction::triangle(2.0 / 3.0);
  const double s2 = sigma_sq(f);
  const auto r = mc_moments(60, f, 200000, 2, 4, parallel_mc());
  const auto& m3 = r.moment(3);
  const auto& m4 = r.moment(4);
  o.check(std::abs(m3.estimate) <= 4.0 * m3.std_error, "m3 " + num(m3.estimate) + ", se " + num(m3.std_error));
  o.check(std::abs(m4.estimate - 3.0 * s2 * s2) <= 4.0 * m4.std_error,
          "m4 " + num(m4.estimate) + " vs " + num(3.0 * s2 * s2) + ", se " + num(m4.std_error));
}

void weyl_brute_force(Outcome& o) {
  double worst = 0.0;
  for (int n = 0; n <= 4; ++n) {
    worst = std::max(worst, std::abs(oracle::weyl_pair_u2(n) - pair_expectation(n, -n, 2)));
  }
  o.check(worst <= 1e-8, "max |quadrature - formula| over n=0..4: " + num(worst));
}

void exact_moment_identity(Outcome& o) {
  const auto f = TestFunction::triangle(1.5);
  const auto m1 = exact_moment(f, 1, 1e-6);
  const auto m2 = exact_moment(f, 2, 1e-6);
  const double d2 = std::abs(m2.value - m1.value * m1.value - sigma_sq(f));
  o.check(d2 <= 1e-5, "|M2 - M1^2 - sigma^2| " + num(d2));
  const auto g = TestFunction::triangle(2.0 / 3.0);
  const double mu = g.fhat(0.0);
  const double s2 = sigma_sq(g);
  const auto m3 = exact_moment(g, 3, 2e-5);
  const double d3 = std::abs(m3.value - (mu * mu * mu + 3.0 * mu * s2));
  o.check(d3 <= 1e-4, "|M3 - mu^3 - 3 mu sigma^2| " + num(d3));
}

void explicit_formula(Outcome& o) {
  struct Case {
    std::uint64_t q;
    double T;
    std::vector<std::uint64_t> ks;
  };
  const Case cases[] = {{11, 60.0, {1, 2, 3, 5, 8}}, {101, 40.0, {1, 2, 37, 50, 85}}};
  const TestFunction fns[] = {parse_test_function("conv(coswin:0.5,coswin:0.5)"),
                              parse_test_function("conv(triangle:0.5,triangle:0.5)")};
  const ZeroCache cache = ZeroCache::from_environment();
  const auto t0 = std::chrono::steady_clock::now();
  double worst_gap = 0.0;
  double worst_ratio = 0.0;
  for (const auto& c : cases) {
    DirichletGroup g(c.q);
    const auto fam = find_zeros_family(g, c.T, {}, &cache, 0);
    for (std::uint64_t k : c.ks) {
      const auto chi = g.character(k);
      const auto& z = fam[k - 1];
      const auto& zc = fam[chi.conjugate().index() - 1];
      for (const auto& f : fns) {
        const auto direct = wf_direct(z, zc, f);
        const auto bar = wf_bar(chi, f);
        const double gap = std::abs(direct.value - bar.value - wf_osc(chi, f));
        const double budget = direct.budget() + bar.budget();
        worst_gap = std::max(worst_gap, gap);
        worst_ratio = std::max(worst_ratio, gap / budget);
      }
    }
  }
  const double secs = seconds_since(t0);
  o.check(worst_ratio <= 1.0, "max gap / certified budget " + num(worst_ratio));
  o.check(worst_gap <= 1e-3, "max gap " + num(worst_gap));
  o.check(secs <= 900.0, "runtime " + num(secs) + " s");
}

void zero_count(Outcome& o) {
  DirichletGroup g(11);
  const ZeroCache cache = ZeroCache::from_environment();
  const auto fam = find_zeros_family(g, 30.0, {}, &cache, 0);
  double total = 0.0;
  for (const auto& z : fam) total += static_cast<double>(z.size());
  const double avg = total / static_cast<double>(fam.size());
  const double asym = zero_count_asymptotic(11, 30.0);
  o.check(std::abs(avg - asym) <= 0.1 * asym, "average count " + num(avg) + " vs " + num(asym));
}

void family_mean(Outcome& o) {
  const auto f = TestFunction::triangle(1.0);
  const double small_q = std::abs(family_stats(101, f, 0.0, 1, FamilyMode::kOscOnly).mean);
  const double large_q = std::abs(family_stats(10007, f, 0.0, 1, FamilyMode::kOscOnly).mean);
  o.check(large_q <= 0.05, "|mean| at q=10007 " + num(large_q));
  o.check(large_q < small_q, "|mean| at q=101 " + num(small_q));
}

void family_variance(Outcome& o) {
  const auto f = TestFunction::triangle(1.0);
  const double target = variance_target(f);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> dev;
  for (std::uint64_t q : {1009u, 10007u, 99991u}) {
    dev.push_back(std::abs(family_stats(q, f, 0.0, 2, FamilyMode::kOscOnly).second_moment - target));
  }
  const double secs = seconds_since(t0);
  o.check(dev[1] < dev[0] && dev[2] < dev[1],
          "deviations " + num(dev[0]) + ", " + num(dev[1]) + ", " + num(dev[2]));
  o.check(dev[2] <= 0.35, "largest-q deviation within 0.35");
  o.check(secs <= 300.0, "runtime " + num(secs) + " s");
}

void small_zero_constants(Outcome& o) {
  double worst_b = 0.0;
  for (double R : {0.25, 0.5, 1.0}) {
    worst_b = std::max(worst_b, std::abs(b_constant(TestFunction::cosine_window(R)) - 1.0 / (4.0 * R)));
  }
  o.check(worst_b <= 1e-10, "b_constant error " + num(worst_b));
  const double b = threshold_beta();
  o.check(std::abs(b - 0.633) <= 5e-4, "beta* " + num(b));
  const double bis = std::abs(b - threshold_beta_bisection());
  o.check(bis <= 1e-10, "closed form vs bisection " + num(bis));
  double worst_path = 0.0;
  for (int i = 0; i <= 136; ++i) {
    const double beta = 0.64 + 0.01 * i;
    worst_path = std::max(worst_path, std::abs(proportion_bound(beta) - proportion_bound_pipeline(beta)));
  }
  o.check(worst_path <= 1e-6, "bound paths on [0.64, 2] " + num(worst_path));
}

void combinatorics(Outcome& o) {
  bool counts = true;
  for (int m = 1; m <= 8; ++m) {
    for (int r = 1; r <= m; ++r) counts = counts && enumerate_partitions(m, r).size() == stirling2(m, r);
  }
  o.check(counts, "enumeration equals S(m, r) for m <= 8");
  bool bells = true;
  for (int m = 1; m <= 12; ++m) {
    std::uint64_t s = 0;
    for (int r = 1; r <= m; ++r) s += stirling2(m, r);
    bells = bells && s == bell(m);
  }
  o.check(bells, "bell(m) = sum_r S(m, r) for m <= 12");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"RMT mean and variance, triangle(1), N=64", rmt_mean_variance},
      {"mock-Gaussian third and fourth moments, triangle(2/3), N=60", mock_gaussian},
      {"pair expectation by Weyl quadrature at N=2", weyl_brute_force},
      {"sine-kernel moments against Fourier-side variance", exact_moment_identity},
      {"explicit formula at q=11 and q=101", explicit_formula},
      {"zero count at q=11, T=30", zero_count},
      {"oscillatory family mean trend", family_mean},
      {"oscillatory second moment trend", family_variance},
      {"small-zero constants", small_zero_constants},
      {"set partition counts", combinatorics},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %zu: %s (%s) [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
