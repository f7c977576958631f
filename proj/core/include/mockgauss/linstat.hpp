#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mockgauss/dirichlet.hpp"
#include "mockgauss/testfn.hpp"
#include "mockgauss/zeros.hpp"

namespace mockgauss {

struct BudgetedValue {
  double value = 0.0;
  double tail_bound = 0.0;
  double quad_error = 0.0;

  double budget() const { return tail_bound + quad_error; }
};

// Certified bound on sum_{|gamma| > T} phi(|gamma|) for the decay envelope
// phi(t) = A (1 + (log q / 2 pi) t)^{-(1 + delta)}, using an explicit bound on
// the zero-counting function.
double zero_tail_bound(std::uint64_t q, const TestFunction& f, double T);

inline constexpr double kDefaultMaxTail = 1e-2;

// W_f(chi) = sum over zeros with both signs of f(x). The negative ordinates of
// chi are the positive ordinates of conj(chi), passed as `conjugate_zeros`.
BudgetedValue wf_direct(const ZeroList& zeros, const ZeroList& conjugate_zeros,
                        const TestFunction& f, double max_tail = kDefaultMaxTail);

// Archimedean part: fhat(0) + (1/L) \int f(x) (Re psi(1/4 + a/2 + i pi x / L) - log pi) dx
// with L = log q. Evaluated on the Fourier side through the integral
// representation of the digamma function, so the only error is quadrature.
BudgetedValue wf_bar(const DirichletCharacter& chi, const TestFunction& f);
BudgetedValue wf_bar(std::uint64_t q, int parity, const TestFunction& f);

// The same quantity by quadrature in x, truncated at a finite X with a
// certified tail. Slow for f decaying like 1/x^2, where the tail dominates.
BudgetedValue wf_bar_xspace(std::uint64_t q, int parity, const TestFunction& f);

// A_r = sum_{n <= q^alpha, n = r mod q} Lambda(n) n^{-1/2} fhat(log n / log q).
struct ResidueSums {
  std::uint64_t q = 0;
  double log_q = 0.0;
  std::vector<double> a;      // indexed by residue 0..q-1
  double diagonal = 0.0;      // sum over n of the squared weights
  std::uint64_t prime_powers = 0;
};

ResidueSums residue_sums(std::uint64_t q, const TestFunction& f);

// -(1/L) sum_n Lambda(n) n^{-1/2} fhat(log n / L) (chi(n) + conj chi(n)).
double wf_osc(const DirichletCharacter& chi, const TestFunction& f);
double wf_osc(const DirichletCharacter& chi, const ResidueSums& sums);

// W^osc for every nontrivial character (k = 1..q-2) by a real FFT over the
// residues ordered by discrete logarithm.
std::vector<double> wf_osc_family(const DirichletGroup& group, const ResidueSums& sums);

struct OscMoments {
  double mean = 0.0;            // character-orthogonality closed form
  double second_moment = 0.0;   // <(W^osc)^2> in closed form
  double diagonal = 0.0;        // (2/L^2) sum Lambda(n)^2/n fhat^2
  double congruent = 0.0;       // (2/L^2) sum over n1 != n2, n1 = n2 mod q
  double inverse_pair = 0.0;    // (2/L^2) sum over n1 n2 = 1 mod q
  double remainder = 0.0;       // the -1/(q-2) weighted part
};

OscMoments osc_moments_exact(const ResidueSums& sums);

enum class FamilyMode { kFromZeros, kOscOnly };
std::string to_string(FamilyMode mode);
FamilyMode parse_family_mode(const std::string& name);

struct TheoryTarget {
  std::string name;
  double value = 0.0;
  bool applicable = false;
  std::string condition;
};

struct FamilyStats {
  std::uint64_t q = 0;
  std::string fn;
  FamilyMode mode = FamilyMode::kOscOnly;
  double height = 0.0;
  int m_max = 0;
  std::vector<std::uint64_t> char_index;
  std::vector<int> parity;
  // The statistic whose moments are reported: W_f in from-zeros mode, W^osc otherwise.
  std::vector<double> values;
  std::vector<double> wf_bar;
  std::vector<double> wf_osc;
  std::vector<double> budgets;
  double mean = 0.0;
  double variance = 0.0;
  double second_moment = 0.0;
  std::vector<double> centered;  // m = 1..m_max; m = 1 entry is 0
  OscMoments osc;
  std::vector<TheoryTarget> targets;
};

struct FamilyOptions {
  ZeroSearchOptions search;
  const ZeroCache* cache = nullptr;
  int workers = 1;
  double max_tail = kDefaultMaxTail;
};

FamilyStats family_stats(std::uint64_t q, const TestFunction& f, double T, int m_max,
                         FamilyMode mode, const FamilyOptions& opts = {});

}  // namespace mockgauss
