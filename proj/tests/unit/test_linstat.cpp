#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "mockgauss/arith.hpp"
#include "mockgauss/dirichlet.hpp"
#include "mockgauss/error.hpp"
#include "mockgauss/linstat.hpp"
#include "mockgauss/testfn.hpp"
#include "mockgauss/zeros.hpp"

using namespace mockgauss;

namespace {

const TestFunction& coswin_pair() {
  static const TestFunction f = parse_test_function("conv(coswin:0.5,coswin:0.5)");
  return f;
}

const TestFunction& triangle_pair() {
  static const TestFunction f = parse_test_function("conv(triangle:0.5,triangle:0.5)");
  return f;
}

// Osc term summed directly over n <= q^alpha with a trial-division von Mangoldt.
double osc_by_trial_division(const DirichletCharacter& chi, const TestFunction& f) {
  const double L = std::log(static_cast<double>(chi.modulus()));
  const auto top = static_cast<std::uint64_t>(std::floor(std::pow(static_cast<double>(chi.modulus()), f.support_halfwidth())));
  double s = 0.0;
  for (std::uint64_t n = 2; n <= top; ++n) {
    const double lam = von_mangoldt(n);
    if (lam == 0.0) continue;
    const double w = lam / std::sqrt(static_cast<double>(n)) * f.fhat(std::log(static_cast<double>(n)) / L);
    s += w * 2.0 * chi.value(static_cast<std::int64_t>(n)).real();
  }
  return -s / L;
}

double family_variance(std::uint64_t q) {
  return family_stats(q, TestFunction::triangle(1.0), 0.0, 2, FamilyMode::kOscOnly).variance;
}

}  // namespace

TEST(ExplicitFormula, DirectEqualsBarPlusOsc) {
  struct Case {
    std::uint64_t q;
    double T;
    std::vector<std::uint64_t> ks;
  };
  const Case cases[] = {{11, 60.0, {1, 2, 3, 5, 8}}, {101, 40.0, {1, 2, 37, 50, 85}}};
  for (const auto& c : cases) {
    DirichletGroup g(c.q);
    for (std::uint64_t k : c.ks) {
      const auto chi = g.character(k);
      const auto z = find_zeros(chi, c.T);
      const auto zc = find_zeros(chi.conjugate(), c.T);
      for (const TestFunction* f : {&coswin_pair(), &triangle_pair()}) {
        const BudgetedValue direct = wf_direct(z, zc, *f);
        const BudgetedValue bar = wf_bar(chi, *f);
        const double osc = wf_osc(chi, *f);
        const double gap = std::abs(direct.value - bar.value - osc);
        EXPECT_LE(gap, direct.budget() + bar.budget() + 1e-6)
            << "q=" << c.q << " k=" << k << " " << f->descriptor() << " tail=" << direct.tail_bound;
      }
    }
  }
}

TEST(WfDirect, EmptyListsAndZeroFunction) {
  ZeroList empty;
  empty.q = 11;
  empty.char_index = 1;
  empty.height = 50.0;
  ZeroList empty_c = empty;
  empty_c.char_index = 9;
  const auto v = wf_direct(empty, empty_c, coswin_pair());
  EXPECT_EQ(v.value, 0.0);
  EXPECT_NEAR(v.tail_bound, zero_tail_bound(11, coswin_pair(), 50.0), 1e-15);

  DirichletGroup g(11);
  const auto z = find_zeros(g.character(2), 30.0);
  const auto zc = find_zeros(g.character(8), 30.0);
  EXPECT_EQ(wf_direct(z, zc, TestFunction::zero()).value, 0.0);
  EXPECT_EQ(wf_bar(g.character(2), TestFunction::zero()).value, 0.0);
  EXPECT_EQ(wf_osc(g.character(2), TestFunction::zero()), 0.0);
}

TEST(WfDirect, RejectsMismatchedLists) {
  DirichletGroup g(11);
  const auto z = find_zeros(g.character(2), 20.0);
  EXPECT_THROW(wf_direct(z, z, coswin_pair()), Error);
}

TEST(WfDirect, TailBudgetEnforced) {
  DirichletGroup g(11);
  const auto z = find_zeros(g.character(1), 10.0);
  const auto zc = find_zeros(g.character(9), 10.0);
  try {
    wf_direct(z, zc, TestFunction::triangle(1.0));
    FAIL() << "expected tail-bound failure";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTailBoundExceeded);
    EXPECT_GT(e.attained(), e.budget());
  }
}

TEST(TailBound, MonotoneAndInadmissible) {
  double prev = std::numeric_limits<double>::infinity();
  for (double T : {1.0, 5.0, 20.0, 80.0, 200.0}) {
    const double t = zero_tail_bound(101, coswin_pair(), T);
    EXPECT_LT(t, prev);
    EXPECT_GT(t, 0.0);
    prev = t;
  }
  EXPECT_TRUE(std::isinf(zero_tail_bound(101, TestFunction::box(1.0), 50.0)));
}

TEST(WfBar, ApproachesZeroModeAsQGrows) {
  const auto f = TestFunction::triangle(1.0);
  const double small = std::abs(wf_bar(11, 0, f).value - f.fhat(0.0));
  const double large = std::abs(wf_bar(1000003, 0, f).value - f.fhat(0.0));
  EXPECT_LT(large, small);
  for (std::uint64_t q : {11u, 101u, 10009u, 1000003u}) {
    for (int a : {0, 1}) {
      const double c = std::abs(wf_bar(q, a, f).value - f.fhat(0.0)) * std::log(static_cast<double>(q));
      EXPECT_LT(c, 10.0) << q << " " << a;
    }
  }
}

TEST(WfBar, ParityGapShrinks) {
  const auto f = coswin_pair();
  double prev = std::numeric_limits<double>::infinity();
  for (std::uint64_t q : {11u, 101u, 10009u}) {
    const double gap = std::abs(wf_bar(q, 0, f).value - wf_bar(q, 1, f).value);
    EXPECT_LT(gap, prev) << q;
    prev = gap;
  }
}

TEST(WfBar, FourierAndXSpaceAgree) {
  for (std::uint64_t q : {11u, 101u}) {
    for (int a : {0, 1}) {
      const auto x = wf_bar_xspace(q, a, coswin_pair());
      const auto w = wf_bar(q, a, coswin_pair());
      EXPECT_LE(std::abs(x.value - w.value), x.budget() + w.budget() + 1e-10);
      const auto xt = wf_bar_xspace(q, a, TestFunction::triangle(1.0));
      const auto wt = wf_bar(q, a, TestFunction::triangle(1.0));
      EXPECT_LE(std::abs(xt.value - wt.value), xt.budget() + wt.budget() + 1e-10);
    }
  }
}

TEST(WfBar, TrivialCharacterRejected) {
  DirichletGroup g(11);
  EXPECT_THROW(wf_bar(g.character(0), coswin_pair()), Error);
  EXPECT_THROW(wf_osc(g.character(0), coswin_pair()), Error);
}

TEST(WfOsc, MatchesTrialDivisionSum) {
  DirichletGroup g(101);
  for (std::uint64_t k : {1u, 4u, 50u, 77u}) {
    for (const auto& f : {TestFunction::triangle(1.0), TestFunction::triangle(1.7), coswin_pair()}) {
      EXPECT_NEAR(wf_osc(g.character(k), f), osc_by_trial_division(g.character(k), f), 1e-12);
    }
  }
}

TEST(WfOsc, EmptyPrimeRange) {
  DirichletGroup g(101);
  const auto f = TestFunction::triangle(0.14);  // 101^0.14 < 2
  EXPECT_EQ(residue_sums(101, f).prime_powers, 0u);
  EXPECT_EQ(wf_osc(g.character(3), f), 0.0);
}

TEST(WfOsc, SieveOverflow) {
  try {
    residue_sums(99991, TestFunction::triangle(2.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSieveRangeOverflow);
  }
}

TEST(WfOsc, FamilyTransformMatchesPerCharacter) {
  for (std::uint64_t q : {11u, 101u, 1009u}) {
    DirichletGroup g(q);
    const auto sums = residue_sums(q, TestFunction::triangle(1.3));
    const auto fam = wf_osc_family(g, sums);
    ASSERT_EQ(fam.size(), q - 2);
    for (std::uint64_t k = 1; k + 1 < q; k += (q > 200 ? 37 : 1)) {
      EXPECT_NEAR(fam[k - 1], wf_osc(g.character(k), sums), 1e-11) << q << " " << k;
    }
  }
}

TEST(WfOsc, ClosedFormMomentsMatchFamily) {
  for (std::uint64_t q : {101u, 1009u}) {
    for (const auto& f : {TestFunction::triangle(1.0), TestFunction::triangle(1.8)}) {
      DirichletGroup g(q);
      const auto sums = residue_sums(q, f);
      const auto fam = wf_osc_family(g, sums);
      double m1 = 0.0;
      double m2 = 0.0;
      for (double v : fam) {
        m1 += v;
        m2 += v * v;
      }
      m1 /= static_cast<double>(fam.size());
      m2 /= static_cast<double>(fam.size());
      const auto ex = osc_moments_exact(sums);
      EXPECT_NEAR(ex.mean, m1, 1e-12);
      EXPECT_NEAR(ex.second_moment, m2, 1e-10);
      EXPECT_NEAR(ex.diagonal + ex.congruent + ex.inverse_pair + ex.remainder, ex.second_moment, 1e-12);
    }
  }
}

TEST(FamilyStats, OscMeanShrinks) {
  const auto f = TestFunction::triangle(1.0);
  const double big = std::abs(family_stats(10007, f, 0.0, 2, FamilyMode::kOscOnly).mean);
  const double small = std::abs(family_stats(101, f, 0.0, 2, FamilyMode::kOscOnly).mean);
  EXPECT_LE(big, 0.05);
  EXPECT_LT(big, small);
}

TEST(FamilyStats, OscVarianceTrend) {
  const double target = variance_target(TestFunction::triangle(1.0));
  EXPECT_NEAR(target, 1.0 / 6.0, 1e-14);
  double prev = std::numeric_limits<double>::infinity();
  for (std::uint64_t q : {1009u, 10007u, 99991u}) {
    const double dev = std::abs(family_variance(q) - target);
    EXPECT_LT(dev, prev) << q;
    prev = dev;
  }
  EXPECT_LE(prev, 0.35);
}

TEST(FamilyStats, InversePairSubdominantAtLargeQ) {
  const auto st = family_stats(99991, TestFunction::triangle(1.0), 0.0, 2, FamilyMode::kOscOnly);
  EXPECT_GT(st.osc.diagonal, std::abs(st.osc.inverse_pair));
  EXPECT_LT(std::abs(st.osc.inverse_pair), 1.0 / std::sqrt(std::log(99991.0)));
}

TEST(FamilyStats, FromZerosMeanMatchesOscPrediction) {
  FamilyOptions opts;
  opts.workers = 0;
  const auto st = family_stats(101, coswin_pair(), 40.0, 3, FamilyMode::kFromZeros, opts);
  ASSERT_EQ(st.values.size(), 99u);
  double bar = 0.0;
  double budget = 0.0;
  for (std::size_t i = 0; i < st.values.size(); ++i) {
    bar += st.wf_bar[i];
    budget += st.budgets[i];
  }
  bar /= 99.0;
  budget /= 99.0;
  EXPECT_LE(std::abs(st.mean - (bar + st.osc.mean)), budget + 1e-6);
  EXPECT_GE(st.variance, 0.0);
  for (std::size_t i = 0; i < st.values.size(); ++i) {
    EXPECT_LE(std::abs(st.values[i] - st.wf_bar[i] - st.wf_osc[i]), st.budgets[i] + 1e-6) << st.char_index[i];
  }
}

TEST(FamilyStats, TargetApplicability) {
  const auto wide = family_stats(101, TestFunction::triangle(1.0), 0.0, 4, FamilyMode::kOscOnly);
  const auto narrow = family_stats(101, TestFunction::triangle(0.45), 0.0, 4, FamilyMode::kOscOnly);
  auto find = [](const FamilyStats& s, const std::string& name) {
    for (const auto& t : s.targets) {
      if (t.name == name) return t;
    }
    ADD_FAILURE() << name;
    return TheoryTarget{};
  };
  EXPECT_TRUE(find(wide, "mean").applicable);
  EXPECT_TRUE(find(wide, "second_moment").applicable);
  EXPECT_FALSE(find(wide, "centered_moment_3").applicable);
  EXPECT_FALSE(find(wide, "centered_moment_4").applicable);
  EXPECT_TRUE(find(narrow, "centered_moment_3").applicable);
  EXPECT_TRUE(find(narrow, "centered_moment_4").applicable);
  EXPECT_NEAR(find(narrow, "centered_moment_4").value, 3.0 * std::pow(variance_target(TestFunction::triangle(0.45)), 2), 1e-15);
  const auto over = family_stats(101, TestFunction::triangle(1.5), 0.0, 2, FamilyMode::kOscOnly);
  EXPECT_FALSE(find(over, "second_moment").applicable);
  EXPECT_EQ(wide.centered[0], 0.0);
  EXPECT_THROW(family_stats(101, TestFunction::triangle(1.0), 0.0, 7, FamilyMode::kOscOnly), Error);
}

TEST(FamilyStats, ModeNames) {
  EXPECT_EQ(parse_family_mode("from-zeros"), FamilyMode::kFromZeros);
  EXPECT_EQ(parse_family_mode(to_string(FamilyMode::kOscOnly)), FamilyMode::kOscOnly);
  EXPECT_THROW(parse_family_mode("zeros"), Error);
}
