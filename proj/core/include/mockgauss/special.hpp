#pragma once

#include <complex>

namespace mockgauss {

using cdouble = std::complex<double>;

// Principal branch of log Gamma, continuous in the right half plane and on
// the imaginary direction; relative accuracy about 1e-14 for Re z > 0.
cdouble log_gamma(cdouble z);

// Digamma psi(z) = Gamma'(z)/Gamma(z).
cdouble digamma(cdouble z);
double digamma(double x);

// Exponential integral E1(x) for x > 0.
double expint_e1(double x);

struct HurwitzValue {
  cdouble value;
  double error_bound;
};

// Hurwitz zeta(s, a) for 0 < a <= 1 by Euler-Maclaurin summation with the
// first `shift` terms summed directly and `bernoulli_terms` correction terms.
// The returned bound covers the Euler-Maclaurin remainder.
HurwitzValue hurwitz_zeta(cdouble s, double a, int shift, int bernoulli_terms = 12);

// Bernoulli number B_{2k} / (2k)!.
double bernoulli_over_factorial(int k);

}  // namespace mockgauss
