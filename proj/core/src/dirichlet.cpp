#include "mockgauss/dirichlet.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mockgauss/arith.hpp"
#include "mockgauss/error.hpp"
#include "mockgauss/quadrature.hpp"
#include "mockgauss/special.hpp"

namespace mockgauss {

struct DirichletGroup::Tables {
  std::uint64_t q = 0;
  std::uint64_t g = 0;
  std::vector<std::uint32_t> index;  // index[n] = log_g n, index[0] unused
  std::vector<std::uint32_t> power;  // power[j] = g^j mod q
  std::vector<cdouble> roots;        // exp(2 pi i j / (q - 1))
};

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kMaxModulus = 1'000'000;
constexpr int kBernoulliTerms = 12;
constexpr int kMaxShift = 1 << 22;

void require_odd_prime(std::uint64_t q) {
  if (q < 3 || q % 2 == 0 || !is_prime(q)) {
    fail(ErrorKind::kNonprimeModulus, std::to_string(q) + " is not an odd prime");
  }
}

std::uint64_t reduce(std::int64_t n, std::uint64_t q) {
  std::int64_t r = n % static_cast<std::int64_t>(q);
  if (r < 0) r += static_cast<std::int64_t>(q);
  return static_cast<std::uint64_t>(r);
}

Rational average_of_residue(std::uint64_t q, std::uint64_t r) {
  if (r == 0) return {0, 1};
  if (r == 1) return {1, 1};
  return {-1, static_cast<std::int64_t>(q - 2)};
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q) { return powmod(a, q - 2, q); }

}  // namespace

DirichletGroup::DirichletGroup(std::uint64_t q) {
  require_odd_prime(q);
  if (q > kMaxModulus) fail(ErrorKind::kOutOfRange, "modulus limited to 10^6");
  auto t = std::make_shared<Tables>();
  t->q = q;
  t->g = primitive_root(q);
  t->index.assign(q, 0);
  t->power.assign(q - 1, 0);
  t->roots.resize(q - 1);
  std::uint64_t x = 1;
  for (std::uint64_t j = 0; j < q - 1; ++j) {
    t->power[j] = static_cast<std::uint32_t>(x);
    t->index[x] = static_cast<std::uint32_t>(j);
    t->roots[j] = std::polar(1.0, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(q - 1));
    x = x * t->g % q;
  }
  tables_ = t;
}

std::uint64_t DirichletGroup::modulus() const { return tables_->q; }
std::uint64_t DirichletGroup::generator() const { return tables_->g; }

std::optional<std::uint64_t> DirichletGroup::index_of(std::int64_t n) const {
  std::uint64_t r = reduce(n, tables_->q);
  if (r == 0) return std::nullopt;
  return tables_->index[r];
}

std::uint64_t DirichletGroup::power_of_generator(std::uint64_t j) const {
  return tables_->power[j % order()];
}

cdouble DirichletGroup::root_of_unity(std::uint64_t j) const { return tables_->roots[j % order()]; }

DirichletCharacter DirichletGroup::character(std::uint64_t k) const {
  if (k >= order()) fail(ErrorKind::kOutOfRange, "character index must be below q - 1");
  return DirichletCharacter(*this, k);
}

std::vector<DirichletCharacter> DirichletGroup::characters() const {
  std::vector<DirichletCharacter> out;
  out.reserve(order());
  for (std::uint64_t k = 0; k < order(); ++k) out.emplace_back(*this, k);
  return out;
}

std::vector<DirichletCharacter> DirichletGroup::nontrivial_characters() const {
  std::vector<DirichletCharacter> out;
  out.reserve(order() - 1);
  for (std::uint64_t k = 1; k < order(); ++k) out.emplace_back(*this, k);
  return out;
}

DirichletCharacter::DirichletCharacter(DirichletGroup group, std::uint64_t k)
    : group_(std::move(group)), k_(k) {}

std::optional<std::uint64_t> DirichletCharacter::exponent(std::int64_t n) const {
  auto ind = group_.index_of(n);
  if (!ind) return std::nullopt;
  return mulmod(k_, *ind, group_.order());
}

std::vector<std::uint64_t> DirichletCharacter::exponent_table() const {
  const std::uint64_t q = modulus();
  std::vector<std::uint64_t> out(q, group_.order());
  for (std::uint64_t n = 1; n < q; ++n) out[n] = *exponent(static_cast<std::int64_t>(n));
  return out;
}

cdouble DirichletCharacter::value(std::int64_t n) const {
  auto e = exponent(n);
  if (!e) return 0.0;
  return group_.root_of_unity(*e);
}

DirichletCharacter DirichletCharacter::conjugate() const {
  return DirichletCharacter(group_, (group_.order() - k_) % group_.order());
}

Rational char_average(std::uint64_t q, std::int64_t n) {
  require_odd_prime(q);
  return average_of_residue(q, reduce(n, q));
}

Rational pair_average(std::uint64_t q, std::int64_t n1, std::int64_t n2, ConjugatePattern pattern) {
  require_odd_prime(q);
  std::uint64_t r1 = reduce(n1, q);
  std::uint64_t r2 = reduce(n2, q);
  if (r1 == 0 || r2 == 0) return {0, 1};
  switch (pattern) {
    case ConjugatePattern::kChiChi:
    case ConjugatePattern::kChiBarChiBar:
      return average_of_residue(q, mulmod(r1, r2, q));
    case ConjugatePattern::kChiChiBar:
      return average_of_residue(q, mulmod(r1, inverse_mod(r2, q), q));
    case ConjugatePattern::kChiBarChi:
      return average_of_residue(q, mulmod(r2, inverse_mod(r1, q), q));
  }
  return {0, 1};
}

cdouble gauss_sum(const DirichletCharacter& chi) {
  const std::uint64_t q = chi.modulus();
  CompensatedSum re;
  CompensatedSum im;
  for (std::uint64_t a = 1; a < q; ++a) {
    cdouble v = chi.value(static_cast<std::int64_t>(a)) *
                std::polar(1.0, 2.0 * kPi * static_cast<double>(a) / static_cast<double>(q));
    re += v.real();
    im += v.imag();
  }
  return {re.value(), im.value()};
}

cdouble root_number(const DirichletCharacter& chi) {
  cdouble i_pow = chi.parity() == 0 ? cdouble(1.0, 0.0) : cdouble(0.0, 1.0);
  return gauss_sum(chi) / (i_pow * std::sqrt(static_cast<double>(chi.modulus())));
}

HurwitzBank::HurwitzBank(std::uint64_t q, cdouble s, double target) : q_(q), s_(s) {
  const double sigma = s.real();
  const double t = std::abs(s.imag());
  const double q_scale = std::pow(static_cast<double>(q), -sigma);
  int shift = std::max(20, static_cast<int>(std::ceil(2.0 * t)));
  for (;;) {
    zeta_.assign(q - 1, 0.0);
    double bound_sum = 0.0;
    for (std::uint64_t a = 1; a < q; ++a) {
      HurwitzValue hv = hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(q), shift,
                                     kBernoulliTerms);
      zeta_[a - 1] = hv.value;
      bound_sum += hv.error_bound;
    }
    error_sum_ = bound_sum * q_scale;
    if (error_sum_ <= target) return;
    if (shift >= kMaxShift) {
      fail(ErrorKind::kAccuracyNotAchieved, "Hurwitz error bound above target", error_sum_, target);
    }
    shift *= 2;
  }
}

LValue HurwitzBank::l_value(const DirichletCharacter& chi) const {
  if (chi.modulus() != q_) fail(ErrorKind::kPreconditionViolation, "character modulus mismatch");
  const std::vector<std::uint64_t> e = chi.exponent_table();
  CompensatedSum re;
  CompensatedSum im;
  for (std::uint64_t a = 1; a < q_; ++a) {
    cdouble v = chi.group().root_of_unity(e[a]) * zeta_[a - 1];
    re += v.real();
    im += v.imag();
  }
  cdouble q_pow = std::exp(-s_ * std::log(static_cast<double>(q_)));
  return {q_pow * cdouble(re.value(), im.value()), error_sum_};
}

LValue l_eval_bounded(const DirichletCharacter& chi, cdouble s, double target) {
  if (chi.is_trivial()) fail(ErrorKind::kPreconditionViolation, "L(s, chi_0) is not supported");
  if (s.real() < -1.0 || s.real() > 2.0 || std::abs(s.imag()) > 1e4) {
    fail(ErrorKind::kDomainViolation, "s outside -1 <= Re s <= 2, |Im s| <= 1e4");
  }
  return HurwitzBank(chi.modulus(), s, target).l_value(chi);
}

cdouble l_eval(const DirichletCharacter& chi, cdouble s) { return l_eval_bounded(chi, s).value; }

cdouble completed_l(const DirichletCharacter& chi, cdouble s) {
  const double a = chi.parity();
  const cdouble w = 0.5 * (s + a);
  const double q = static_cast<double>(chi.modulus());
  return std::exp(w * std::log(q / kPi) + log_gamma(w)) * l_eval(chi, s);
}

double hardy_theta(std::uint64_t q, int parity, double t) {
  const cdouble w(0.25 + 0.5 * parity, 0.5 * t);
  return 0.5 * t * std::log(static_cast<double>(q) / kPi) + log_gamma(w).imag();
}

cdouble hardy_z_complex(const DirichletCharacter& chi, double t) {
  const cdouble eps = root_number(chi);
  const double phase = hardy_theta(chi.modulus(), chi.parity(), t) - 0.5 * std::arg(eps);
  return std::polar(1.0, phase) * l_eval(chi, cdouble(0.5, t));
}

double hardy_z(const DirichletCharacter& chi, double t) {
  cdouble z = hardy_z_complex(chi, t);
  if (std::abs(z.imag()) > kPhaseTolerance) {
    fail(ErrorKind::kPhaseResidualExceeded,
         "imaginary part of the Hardy function at t = " + std::to_string(t), std::abs(z.imag()),
         kPhaseTolerance);
  }
  return z.real();
}

}  // namespace mockgauss
