#pragma once

#include <span>
#include <vector>

#include "mockgauss/testfn.hpp"

namespace mockgauss {

// sin(pi x) / (pi x) with the value 1 at 0.
double sinc_pi(double x);

// det[ sin(pi (x_j - x_i)) / (pi (x_j - x_i)) ] for up to four points.
double sine_kernel_det(std::span<const double> xs);

// N^{-r} det[ S_N(2 pi (x_j - x_i) / N) ] with S_N(x) = sin(N x / 2) / sin(x / 2).
double dyson_prelimit_kernel(std::span<const double> xs, int N);

struct MomentValue {
  double value = 0.0;
  double error = 0.0;  // certified truncation bound plus quadrature estimate
};

// \int R_r(x_1..x_r) prod_q f(x_q)^{lambda_q} dx over R^r, for r <= 3.
MomentValue partition_integral(const TestFunction& f, std::span<const int> block_sizes,
                               double tolerance);

// Unrestricted moment M_m = sum over set partitions of partition_integral, m <= 3.
MomentValue exact_moment(const TestFunction& f, int m, double tolerance);

struct MomentTerm {
  std::vector<int> labels;
  std::vector<int> block_sizes;
  MomentValue value;
};

// The individual partition terms making up M_m, one per set partition.
std::vector<MomentTerm> exact_moment_terms(const TestFunction& f, int m, double tolerance);

}  // namespace mockgauss
