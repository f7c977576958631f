#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "mockgauss/arith.hpp"
#include "mockgauss/dirichlet.hpp"
#include "mockgauss/error.hpp"
#include "mockgauss/random.hpp"
#include "oracles.hpp"

using namespace mockgauss;
using oracle::kPi;

namespace {

// Character table built from scratch: brute-force primitive root and
// discrete logarithms, values as floating roots of unity.
struct BruteTable {
  std::uint64_t q;
  std::vector<std::int64_t> ind;  // -1 for n = 0

  explicit BruteTable(std::uint64_t q_) : q(q_), ind(q_, -1) {
    for (std::uint64_t g = 2; g < q; ++g) {
      std::vector<std::int64_t> seen(q, -1);
      std::uint64_t x = 1;
      bool full = true;
      for (std::uint64_t j = 0; j + 1 < q; ++j) {
        if (seen[x] >= 0) {
          full = false;
          break;
        }
        seen[x] = static_cast<std::int64_t>(j);
        x = x * g % q;
      }
      if (full) {
        ind = seen;
        return;
      }
    }
  }

  cdouble value(std::uint64_t k, std::int64_t n) const {
    const std::int64_t r = ((n % static_cast<std::int64_t>(q)) + static_cast<std::int64_t>(q)) % static_cast<std::int64_t>(q);
    if (r == 0) return 0.0;
    const double ph = 2.0 * kPi * static_cast<double>(k * static_cast<std::uint64_t>(ind[static_cast<std::size_t>(r)]) % (q - 1)) / static_cast<double>(q - 1);
    return std::polar(1.0, ph);
  }
};

cdouble brute_average(const BruteTable& t, std::int64_t n1, std::int64_t n2, ConjugatePattern p) {
  cdouble acc = 0.0;
  for (std::uint64_t k = 1; k + 1 < t.q; ++k) {
    cdouble a = t.value(k, n1);
    cdouble b = t.value(k, n2);
    if (p == ConjugatePattern::kChiBarChi || p == ConjugatePattern::kChiBarChiBar) a = std::conj(a);
    if (p == ConjugatePattern::kChiChiBar || p == ConjugatePattern::kChiBarChiBar) b = std::conj(b);
    acc += a * b;
  }
  return acc / static_cast<double>(t.q - 2);
}

// sum_n chi(n) n^{-s} for Re s = 2, grouped into full periods. Each period
// after the first sums to O(m^{-3}), giving a tail at most (q - 1) / (q^2 M^2).
cdouble series_re2(const DirichletCharacter& chi, cdouble s, std::int64_t periods) {
  const auto q = static_cast<std::int64_t>(chi.modulus());
  cdouble acc = 0.0;
  for (std::int64_t m = periods - 1; m >= 0; --m) {
    cdouble block = 0.0;
    for (std::int64_t a = 1; a < q; ++a) block += chi.value(a) * std::pow(static_cast<double>(a + m * q), -s);
    acc += block;
  }
  return acc;
}

cdouble functional_equation_residual(const DirichletCharacter& chi, cdouble s) {
  const cdouble lhs = completed_l(chi, s);
  const cdouble rhs = root_number(chi) * completed_l(chi.conjugate(), 1.0 - s);
  return (lhs - rhs) / std::max(1.0, std::abs(lhs));
}

}  // namespace

TEST(Characters, CountsAndParity) {
  DirichletGroup g5(5);
  EXPECT_EQ(g5.characters().size(), 4u);
  EXPECT_EQ(g5.nontrivial_characters().size(), 3u);
  EXPECT_TRUE(g5.character(0).is_trivial());
  for (std::uint64_t q : {7u, 11u, 101u}) {
    DirichletGroup g(q);
    int odd = 0;
    for (const auto& chi : g.characters()) {
      const bool minus_one = std::abs(chi.value(static_cast<std::int64_t>(q) - 1) + 1.0) < 1e-12;
      EXPECT_EQ(chi.parity() == 1, minus_one);
      odd += chi.parity();
    }
    EXPECT_EQ(odd, static_cast<int>((q - 1) / 2));
  }
}

TEST(Characters, MatchBruteForceTable) {
  for (std::uint64_t q : {7u, 11u, 13u}) {
    DirichletGroup g(q);
    BruteTable t(q);
    EXPECT_EQ(g.generator(), primitive_root(q));
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
      const auto chi = g.character(k);
      for (std::int64_t n = -3 * static_cast<std::int64_t>(q); n <= 3 * static_cast<std::int64_t>(q); ++n) {
        EXPECT_LT(std::abs(chi.value(n) - t.value(k, n)), 1e-12) << q << " " << k << " " << n;
      }
    }
  }
}

TEST(Characters, MultiplicativeAndPeriodic) {
  DirichletGroup g(23);
  for (const auto& chi : g.characters()) {
    for (std::int64_t m = 1; m < 23; ++m) {
      EXPECT_EQ(chi.value(m), chi.value(m + 23));
      for (std::int64_t n = 1; n < 23; ++n) {
        EXPECT_EQ(*chi.exponent(m * n), (*chi.exponent(m) + *chi.exponent(n)) % 22);
      }
    }
    EXPECT_EQ(chi.value(0), cdouble(0.0));
    EXPECT_EQ(chi.value(46), cdouble(0.0));
    EXPECT_FALSE(chi.exponent(23).has_value());
    EXPECT_EQ(chi.conjugate().conjugate().index(), chi.index());
  }
}

TEST(Characters, Orthogonality) {
  DirichletGroup g(31);
  for (const auto& chi : g.nontrivial_characters()) {
    cdouble s = 0.0;
    for (std::int64_t n = 1; n <= 31; ++n) s += chi.value(n);
    EXPECT_LT(std::abs(s), 1e-12);
  }
}

TEST(Characters, NonprimeModulus) {
  for (std::uint64_t q : {1u, 2u, 9u, 15u, 91u}) {
    try {
      DirichletGroup g(q);
      ADD_FAILURE() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kNonprimeModulus) << q;
    }
  }
}

TEST(Averages, CharAverageCases) {
  EXPECT_EQ(char_average(11, 1), (Rational{1, 1}));
  EXPECT_EQ(char_average(11, 12), (Rational{1, 1}));
  EXPECT_EQ(char_average(11, 22), (Rational{0, 1}));
  EXPECT_EQ(char_average(11, 0), (Rational{0, 1}));
  EXPECT_EQ(char_average(11, 2), (Rational{-1, 9}));
  EXPECT_EQ(char_average(11, -1), (Rational{-1, 9}));
}

TEST(Averages, MatchTableSums) {
  const ConjugatePattern patterns[] = {ConjugatePattern::kChiChi, ConjugatePattern::kChiChiBar,
                                       ConjugatePattern::kChiBarChi, ConjugatePattern::kChiBarChiBar};
  for (std::uint64_t q : {5u, 7u, 11u, 101u}) {
    BruteTable t(q);
    const auto lim = static_cast<std::int64_t>(3 * q);
    for (std::int64_t n = 0; n <= lim; ++n) {
      const cdouble direct = brute_average(t, n, 1, ConjugatePattern::kChiChi);
      EXPECT_NEAR(char_average(q, n).to_double(), direct.real(), 1e-12);
      EXPECT_NEAR(direct.imag(), 0.0, 1e-12);
    }
    const std::int64_t step = q > 20 ? 7 : 1;
    for (std::int64_t n1 = 0; n1 <= lim; n1 += step) {
      for (std::int64_t n2 = 0; n2 <= lim; n2 += step) {
        for (auto p : patterns) {
          const cdouble direct = brute_average(t, n1, n2, p);
          const Rational r = pair_average(q, n1, n2, p);
          EXPECT_NEAR(r.to_double(), direct.real(), 1e-12) << q << " " << n1 << " " << n2;
          EXPECT_NEAR(direct.imag(), 0.0, 1e-12);
        }
      }
    }
  }
}

TEST(Averages, PairCases) {
  EXPECT_EQ(pair_average(13, 5, 18, ConjugatePattern::kChiChiBar), (Rational{1, 1}));
  EXPECT_EQ(pair_average(13, 2, 7, ConjugatePattern::kChiChi), (Rational{1, 1}));
  EXPECT_EQ(pair_average(13, 2, 7, ConjugatePattern::kChiBarChiBar), (Rational{1, 1}));
  for (auto p : {ConjugatePattern::kChiChi, ConjugatePattern::kChiChiBar, ConjugatePattern::kChiBarChi}) {
    EXPECT_EQ(pair_average(13, 26, 5, p), (Rational{0, 1}));
  }
}

TEST(GaussSums, ModulusAndDirectSum) {
  for (std::uint64_t q : {7u, 11u, 101u}) {
    DirichletGroup g(q);
    for (const auto& chi : g.nontrivial_characters()) {
      const cdouble tau = gauss_sum(chi);
      cdouble direct = 0.0;
      for (std::uint64_t a = 1; a < q; ++a) {
        direct += chi.value(static_cast<std::int64_t>(a)) * std::polar(1.0, 2.0 * kPi * static_cast<double>(a) / static_cast<double>(q));
      }
      EXPECT_LT(std::abs(tau - direct), 1e-10);
      EXPECT_NEAR(std::norm(tau), static_cast<double>(q), 1e-9);
      EXPECT_NEAR(std::abs(root_number(chi)), 1.0, 1e-12);
    }
    // The quadratic character has root number 1.
    const auto legendre = g.character((q - 1) / 2);
    EXPECT_LT(std::abs(root_number(legendre) - 1.0), 1e-12);
  }
}

TEST(LFunction, MatchesSeriesAtReTwo) {
  DirichletGroup g(7);
  for (const auto& chi : g.nontrivial_characters()) {
    for (double t : {0.0, 1.5, -7.0, 30.0}) {
      const cdouble s(2.0, t);
      const LValue v = l_eval_bounded(chi, s);
      EXPECT_LE(v.error_bound, kLTarget);
      EXPECT_LT(std::abs(v.value - series_re2(chi, s, 200000)), 1e-10) << chi.index() << " " << t;
    }
  }
}

TEST(LFunction, ConjugationSymmetry) {
  DirichletGroup g(11);
  const cdouble pts[] = {{0.5, 14.2}, {-0.7, 3.0}, {1.9, -40.0}, {0.1, 0.0}};
  for (const auto& chi : g.nontrivial_characters()) {
    for (cdouble s : pts) {
      const cdouble a = l_eval(chi.conjugate(), std::conj(s));
      const cdouble b = std::conj(l_eval(chi, s));
      EXPECT_LT(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST(LFunction, FunctionalEquation) {
  RandomStream rs(77, 0);
  for (std::uint64_t q : {7u, 11u}) {
    DirichletGroup g(q);
    for (int i = 0; i < 10; ++i) {
      const auto chi = g.character(1 + static_cast<std::uint64_t>(rs.uniform() * static_cast<double>(q - 2)) % (q - 2));
      const cdouble s(-1.0 + 3.0 * rs.uniform(), -50.0 + 100.0 * rs.uniform());
      EXPECT_LT(std::abs(functional_equation_residual(chi, s)), 1e-8) << q << " " << chi.index() << " " << s;
    }
  }
}

TEST(LFunction, HurwitzBankAgrees) {
  DirichletGroup g(13);
  const cdouble s(0.5, 21.0);
  HurwitzBank bank(13, s);
  for (const auto& chi : g.nontrivial_characters()) {
    EXPECT_LT(std::abs(bank.l_value(chi).value - l_eval(chi, s)), 1e-12);
  }
}

TEST(LFunction, OutsideStripRejected) {
  DirichletGroup g(7);
  EXPECT_THROW(l_eval(g.character(1), cdouble(3.0, 0.0)), Error);
  EXPECT_THROW(l_eval(g.character(1), cdouble(0.5, 2e4)), Error);
}

TEST(HardyZ, RealOnCriticalLine) {
  DirichletGroup g(7);
  for (const auto& chi : g.nontrivial_characters()) {
    for (int i = 0; i <= 500; ++i) {
      const double t = 0.1 * i;
      const cdouble z = hardy_z_complex(chi, t);
      EXPECT_LE(std::abs(z.imag()), 1e-8) << chi.index() << " " << t;
      EXPECT_NEAR(std::abs(z), std::abs(l_eval(chi, cdouble(0.5, t))), 1e-10 * std::max(1.0, std::abs(z)));
    }
  }
}

TEST(HardyZ, ConjugateCharacterMirror) {
  DirichletGroup g(11);
  for (const auto& chi : g.nontrivial_characters()) {
    for (double t : {0.3, 2.0, 9.7, 25.0}) {
      EXPECT_NEAR(hardy_z(chi, t), hardy_z(chi.conjugate(), -t), 1e-10) << chi.index() << " " << t;
    }
  }
}

TEST(HardyZ, ThetaIsContinuous) {
  double prev = hardy_theta(101, 1, 0.0);
  EXPECT_NEAR(prev, 0.0, 1e-15);
  for (int i = 1; i <= 2000; ++i) {
    const double th = hardy_theta(101, 1, 0.05 * i);
    EXPECT_LT(std::abs(th - prev), 0.5);
    prev = th;
  }
}
