#include "fftw_support.hpp"

#include <algorithm>

namespace mockgauss::detail {

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

namespace {

std::size_t fft_size(std::size_t at_least) {
  std::size_t m = 1;
  while (m < at_least) m <<= 1;
  return m;
}

}  // namespace

ToeplitzConvolver::ToeplitzConvolver(const std::vector<double>& kernel)
    : n_(kernel.size()), m_(fft_size(2 * kernel.size())) {
  buf_ = fftw_alloc_real(m_);
  spec_ = fftw_alloc_complex(m_ / 2 + 1);
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    forward_ = fftw_plan_dft_r2c_1d(static_cast<int>(m_), buf_, spec_, FFTW_ESTIMATE);
    backward_ = fftw_plan_dft_c2r_1d(static_cast<int>(m_), spec_, buf_, FFTW_ESTIMATE);
  }
  // Circular kernel: lags 0..n-1 at the front, negative lags wrapped to the back.
  std::fill(buf_, buf_ + m_, 0.0);
  for (std::size_t d = 0; d < n_; ++d) buf_[d] = kernel[d];
  for (std::size_t d = 1; d < n_; ++d) buf_[m_ - d] = kernel[d];
  fftw_execute(forward_);
  kernel_hat_.resize(m_ / 2 + 1);
  for (std::size_t i = 0; i < kernel_hat_.size(); ++i) kernel_hat_[i] = {spec_[i][0], spec_[i][1]};
}

ToeplitzConvolver::~ToeplitzConvolver() {
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
  }
  fftw_free(buf_);
  fftw_free(spec_);
}

void ToeplitzConvolver::apply(const std::vector<double>& v, std::vector<double>& out) {
  std::fill(buf_, buf_ + m_, 0.0);
  std::copy(v.begin(), v.end(), buf_);
  fftw_execute(forward_);
  for (std::size_t i = 0; i < kernel_hat_.size(); ++i) {
    std::complex<double> z(spec_[i][0], spec_[i][1]);
    z *= kernel_hat_[i];
    spec_[i][0] = z.real();
    spec_[i][1] = z.imag();
  }
  fftw_execute(backward_);
  out.resize(n_);
  const double scale = 1.0 / static_cast<double>(m_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = buf_[i] * scale;
}

}  // namespace mockgauss::detail
