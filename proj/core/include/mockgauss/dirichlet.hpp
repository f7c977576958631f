#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mockgauss {

using cdouble = std::complex<double>;

class DirichletCharacter;

// Characters modulo an odd prime q, indexed by k in 0..q-2 against the
// smallest primitive root g: chi_k(g^j) = exp(2 pi i k j / (q - 1)).
class DirichletGroup {
 public:
  explicit DirichletGroup(std::uint64_t q);

  std::uint64_t modulus() const;
  std::uint64_t order() const { return modulus() - 1; }
  std::uint64_t generator() const;
  // Discrete logarithm of n to base g, or nullopt when q | n.
  std::optional<std::uint64_t> index_of(std::int64_t n) const;
  // g^j mod q.
  std::uint64_t power_of_generator(std::uint64_t j) const;
  // exp(2 pi i j / (q - 1)).
  cdouble root_of_unity(std::uint64_t j) const;

  DirichletCharacter character(std::uint64_t k) const;
  std::vector<DirichletCharacter> characters() const;
  std::vector<DirichletCharacter> nontrivial_characters() const;

  struct Tables;

 private:
  std::shared_ptr<const Tables> tables_;
};

class DirichletCharacter {
 public:
  DirichletCharacter(DirichletGroup group, std::uint64_t k);

  std::uint64_t modulus() const { return group_.modulus(); }
  std::uint64_t index() const { return k_; }
  int parity() const { return static_cast<int>(k_ % 2); }
  bool is_trivial() const { return k_ == 0; }
  bool is_real() const { return (2 * k_) % group_.order() == 0; }
  const DirichletGroup& group() const { return group_; }

  // Exponent e with chi(n) = exp(2 pi i e / (q - 1)), or nullopt when q | n.
  std::optional<std::uint64_t> exponent(std::int64_t n) const;
  // Exponent table for n = 0..q-1; entry 0 is a sentinel equal to q - 1.
  std::vector<std::uint64_t> exponent_table() const;
  cdouble value(std::int64_t n) const;
  DirichletCharacter conjugate() const;

 private:
  DirichletGroup group_;
  std::uint64_t k_;
};

// An exact rational value num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational& o) const { return num * o.den == o.num * den; }
};

// Average of chi(n) over the q - 2 nontrivial characters.
Rational char_average(std::uint64_t q, std::int64_t n);

enum class ConjugatePattern { kChiChi, kChiChiBar, kChiBarChi, kChiBarChiBar };

// Average over nontrivial chi of the product of chi or conj(chi) at n1 and n2.
Rational pair_average(std::uint64_t q, std::int64_t n1, std::int64_t n2, ConjugatePattern pattern);

cdouble gauss_sum(const DirichletCharacter& chi);
// epsilon(chi) = tau(chi) / (i^a sqrt(q)).
cdouble root_number(const DirichletCharacter& chi);

struct LValue {
  cdouble value;
  double error_bound = 0.0;
};

inline constexpr double kLTarget = 1e-10;

// L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q) with certified Euler-Maclaurin
// error. Valid for -1 <= Re s <= 2 and |Im s| <= 1e4.
LValue l_eval_bounded(const DirichletCharacter& chi, cdouble s, double target = kLTarget);
cdouble l_eval(const DirichletCharacter& chi, cdouble s);

// Hurwitz values zeta(s, a/q), a = 1..q-1, shared by every character mod q.
class HurwitzBank {
 public:
  HurwitzBank(std::uint64_t q, cdouble s, double target = kLTarget);
  LValue l_value(const DirichletCharacter& chi) const;
  const std::vector<cdouble>& values() const { return zeta_; }

 private:
  std::uint64_t q_;
  cdouble s_;
  std::vector<cdouble> zeta_;
  double error_sum_ = 0.0;
};

// Lambda(s, chi) = (q/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi).
cdouble completed_l(const DirichletCharacter& chi, cdouble s);

// theta(t) = (t/2) log(q/pi) + arg Gamma((1/2 + a + i t)/2), continuous in t.
double hardy_theta(std::uint64_t q, int parity, double t);

// epsilon^{-1/2} e^{i theta(t)} L(1/2 + i t, chi); real on exact arithmetic.
cdouble hardy_z_complex(const DirichletCharacter& chi, double t);
// Real part after asserting the imaginary residue is at most 1e-8.
double hardy_z(const DirichletCharacter& chi, double t);

inline constexpr double kPhaseTolerance = 1e-8;

}  // namespace mockgauss
