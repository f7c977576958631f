#include <cmath>
#include <sstream>

#include "mockgauss/dirichlet.hpp"
#include "mockgauss/linstat.hpp"
#include "mockgauss/moments.hpp"
#include "mockgauss/partitions.hpp"
#include "mockgauss/rmt.hpp"
#include "mockgauss/smallzero.hpp"
#include "mockgauss/testfn.hpp"
#include "mockgauss/zeros.hpp"
#include "mockgauss_cli/cli.hpp"
#include "output.hpp"

namespace mockgauss::cli {
namespace {

SelftestResult check_close(const std::string& name, double got, double want, double tol) {
  const double diff = std::abs(got - want);
  std::ostringstream os;
  os << "got " << fmt(got) << ", want " << fmt(want) << ", |diff| " << fmt(diff) << " <= " << fmt(tol);
  return {name, diff <= tol, os.str()};
}

SelftestResult partition_counts() {
  for (int m = 1; m <= 8; ++m) {
    for (int r = 1; r <= m; ++r) {
      if (enumerate_partitions(m, r).size() != stirling2(m, r)) {
        return {"partition counts", false, "mismatch at m=" + std::to_string(m) + " r=" + std::to_string(r)};
      }
    }
  }
  return {"partition counts", true, "enumeration matches S(m,r) for m <= 8"};
}

SelftestResult gauss_sum_modulus() {
  DirichletGroup g(11);
  double worst = 0.0;
  for (const DirichletCharacter& chi : g.nontrivial_characters()) {
    worst = std::max(worst, std::abs(std::norm(gauss_sum(chi)) - 11.0));
  }
  return check_close("gauss sum |tau|^2 = q at q=11", 11.0 + worst, 11.0, 1e-9);
}

SelftestResult osc_family_mean() {
  const TestFunction f = TestFunction::triangle(1.0);
  DirichletGroup g(101);
  const ResidueSums sums = residue_sums(101, f);
  const std::vector<double> fam = wf_osc_family(g, sums);
  double mean = 0.0;
  for (double v : fam) mean += v;
  mean /= static_cast<double>(fam.size());
  return check_close("osc family mean vs orthogonality at q=101", mean, osc_moments_exact(sums).mean, 1e-12);
}

SelftestResult wf_bar_routes() {
  const TestFunction f = parse_test_function("conv(coswin:0.5,coswin:0.5)");
  const BudgetedValue x = wf_bar_xspace(101, 1, f);
  return check_close("archimedean term: Fourier vs x-space", wf_bar(101, 1, f).value, x.value,
                     x.budget() + 1e-9);
}

SelftestResult explicit_formula() {
  const TestFunction f = parse_test_function("conv(coswin:0.5,coswin:0.5)");
  DirichletGroup g(11);
  const DirichletCharacter chi = g.character(3);
  const double T = 40.0;
  const ZeroList z = find_zeros(chi, T);
  const ZeroList zc = find_zeros(chi.conjugate(), T);
  const BudgetedValue direct = wf_direct(z, zc, f);
  const double pieces = wf_bar(chi, f).value + wf_osc(chi, f);
  return check_close("explicit formula at q=11, k=3, T=40", direct.value, pieces, direct.budget() + 1e-6);
}

SelftestResult exact_variance() {
  const TestFunction f = TestFunction::triangle(1.5);
  const MomentValue m1 = exact_moment(f, 1, 1e-6);
  const MomentValue m2 = exact_moment(f, 2, 1e-6);
  return check_close("sine-kernel M2 - M1^2 = sigma^2 for triangle(1.5)", m2.value - m1.value * m1.value,
                     sigma_sq(f), 1e-5);
}

SelftestResult cue_mean() {
  const TestFunction f = TestFunction::triangle(1.0);
  const MomentReport r = mc_moments(24, f, 4000, 7, 2);
  const MomentEstimate& m = r.moment(1);
  return check_close("CUE mean of Z_f, N=24", m.estimate, 1.0, 4.0 * m.std_error);
}

SelftestResult small_zero_constants() {
  const double gap = std::abs(proportion_bound(0.7) - proportion_bound_pipeline(0.7));
  SelftestResult r = check_close("threshold beta closed form vs bisection", threshold_beta(),
                                 threshold_beta_bisection(), 1e-10);
  if (r.passed && gap > 1e-6) return {r.name, false, "bound paths differ by " + fmt(gap)};
  return r;
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
  std::vector<SelftestResult (*)()> checks = {
      partition_counts, gauss_sum_modulus, osc_family_mean, wf_bar_routes,
      explicit_formula, exact_variance,    cue_mean,        small_zero_constants,
  };
  std::vector<SelftestResult> out;
  for (auto* c : checks) {
    try {
      out.push_back(c());
    } catch (const std::exception& e) {
      out.push_back({"exception", false, e.what()});
    }
  }
  out.push_back(check_close("b_constant(coswin:0.5) = 1/2", b_constant(TestFunction::cosine_window(0.5)), 0.5,
                            1e-10));
  return out;
}

}  // namespace mockgauss::cli
