#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mockgauss/random.hpp"
#include "mockgauss/testfn.hpp"

namespace mockgauss {

using cdouble = std::complex<double>;

struct EigenphaseSample {
  int dimension = 0;
  std::vector<double> angles;  // each in (-pi, pi]
  std::uint64_t seed_tag = 0;
  double unitarity_residual = 0.0;
};

// Haar unitary by QR of a complex Ginibre matrix with the diagonal phase fix,
// followed by a dense eigensolve.
EigenphaseSample sample_cue(int N, RandomStream& stream);

// Tr U^n for n = 0..n_max by iterated phase multiplication.
std::vector<cdouble> traces(const EigenphaseSample& s, int n_max);

// Verblunsky coefficients of a Haar unitary: independent, rotation invariant,
// |alpha_k|^2 ~ Beta(1, N-k-1) for k < N-1 and |alpha_{N-1}| = 1.
std::vector<cdouble> sample_verblunsky(int N, RandomStream& stream);

// Coefficients (ascending) of the monic characteristic polynomial whose roots
// are the eigenvalues of the CMV matrix built from alpha, via Szego recursion.
std::vector<cdouble> szego_polynomial(std::span<const cdouble> alpha);

// Power sums Tr U^n, n = 0..n_max, of the roots of a monic polynomial by
// Newton's identities.
std::vector<cdouble> power_sums(std::span<const cdouble> monic_coeffs, int n_max);

// The CMV matrix of the given Verblunsky coefficients (unitary when the last
// one has unit modulus).
Eigen::MatrixXcd cmv_matrix(std::span<const cdouble> alpha);

// Tr U^n, n = 0..n_max, of a Haar unitary sampled in O(N^2) without an
// eigensolve.
std::vector<cdouble> sample_cue_traces(int N, int n_max, RandomStream& stream);

// Z_f(U) = sum_{|n| <= ceil(alpha N)} (1/N) fhat(n/N) Tr U^n.
double zf_eval(const EigenphaseSample& s, const TestFunction& f);
double zf_from_traces(std::span<const cdouble> traces, int N, const TestFunction& f);

// Number of traces Z_f needs: ceil(alpha N).
int trace_cutoff(const TestFunction& f, int N);

// E Tr U^n Tr U^m.
double pair_expectation(int n, int m, int N);

// delta_{a,b} prod_j j^{a_j} a_j!, where a_j counts factors Tr U^j.
double ds_expectation(std::span<const int> a, std::span<const int> b, int N);

// Exact finite-N variance of Z_f: (2/N^2) sum_{n>=1} fhat(n/N)^2 min(n, N).
double zf_variance_exact(const TestFunction& f, int N);

enum class Sampler { kQr, kVerblunsky };
std::string to_string(Sampler s);
Sampler parse_sampler(const std::string& name);

struct McOptions {
  Sampler sampler = Sampler::kVerblunsky;
  int workers = 0;
  int batches = 100;
};

struct MomentEstimate {
  int m = 0;
  // m = 1: the mean; m >= 2: the centered moment.
  double estimate = 0.0;
  double std_error = 0.0;
  // Uncentered moment E Z^m.
  double raw = 0.0;
  double raw_std_error = 0.0;
  std::optional<double> prediction;
  std::string prediction_source;
};

struct MomentReport {
  int dimension = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  int m_max = 0;
  int batches = 0;
  std::string sampler;
  std::string fn;
  double sigma_sq = 0.0;
  double finite_n_variance = 0.0;
  std::vector<MomentEstimate> moments;

  const MomentEstimate& moment(int m) const { return moments.at(static_cast<std::size_t>(m - 1)); }
};

// (m-1)!! sigma^m for even m, 0 for odd m.
double gaussian_moment(int m, double sigma_sq);

MomentReport mc_moments(int N, const TestFunction& f, long long samples, std::uint64_t seed,
                        int m_max, const McOptions& opts = {});

struct TraceMoment {
  cdouble mean;
  double std_error_re = 0.0;
  double std_error_im = 0.0;
};

// Monte-Carlo estimate of E prod_j Tr U^{n_j} (negative n_j conjugate).
TraceMoment mc_trace_moment(int N, std::span<const int> exponents, long long samples,
                            std::uint64_t seed, const McOptions& opts = {});

}  // namespace mockgauss
