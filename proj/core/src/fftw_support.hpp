#pragma once

#include <complex>
#include <mutex>
#include <vector>

#include <fftw3.h>

namespace mockgauss::detail {

// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex& fftw_planner_mutex();

// Linear convolution of length-n vectors with a fixed symmetric Toeplitz
// kernel k(i - j), i, j in [0, n).
class ToeplitzConvolver {
 public:
  // kernel[d] = k(d) for d = 0..n-1; k(-d) = k(d).
  explicit ToeplitzConvolver(const std::vector<double>& kernel);
  ~ToeplitzConvolver();
  ToeplitzConvolver(const ToeplitzConvolver&) = delete;
  ToeplitzConvolver& operator=(const ToeplitzConvolver&) = delete;

  // out_i = sum_j k(i - j) v_j
  void apply(const std::vector<double>& v, std::vector<double>& out);

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::complex<double>> kernel_hat_;
  double* buf_;
  fftw_complex* spec_;
  fftw_plan forward_;
  fftw_plan backward_;
};

}  // namespace mockgauss::detail
