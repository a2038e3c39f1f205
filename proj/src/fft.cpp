#include "sparsepde/fft.hpp"

#include <fftw3.h>

#include <cassert>
#include <cstring>
#include <mutex>

namespace sparsepde {

namespace {
// FFTW plan creation is not thread safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

RealFft::RealFft(int n) : n_(n) {
  assert(n > 1);
  std::lock_guard<std::mutex> lock(planner_mutex());
  real_buf_ = fftw_alloc_real(n_);
  complex_buf_ = fftw_alloc_complex(n_ / 2 + 1);
  forward_plan_ = fftw_plan_dft_r2c_1d(n_, real_buf_, static_cast<fftw_complex*>(complex_buf_),
                                       FFTW_ESTIMATE);
  inverse_plan_ = fftw_plan_dft_c2r_1d(n_, static_cast<fftw_complex*>(complex_buf_), real_buf_,
                                       FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
  fftw_free(real_buf_);
  fftw_free(complex_buf_);
}

Eigen::VectorXcd RealFft::forward(const Eigen::VectorXd& in) {
  assert(in.size() == n_);
  std::memcpy(real_buf_, in.data(), sizeof(double) * n_);
  fftw_execute(static_cast<fftw_plan>(forward_plan_));
  Eigen::VectorXcd out(spectrum_size());
  std::memcpy(out.data(), complex_buf_, sizeof(std::complex<double>) * spectrum_size());
  return out;
}

Eigen::VectorXd RealFft::inverse(const Eigen::VectorXcd& in) {
  assert(in.size() == spectrum_size());
  std::memcpy(complex_buf_, in.data(), sizeof(std::complex<double>) * spectrum_size());
  fftw_execute(static_cast<fftw_plan>(inverse_plan_));
  Eigen::VectorXd out(n_);
  for (int i = 0; i < n_; ++i) out[i] = real_buf_[i] / n_;
  return out;
}

}  // namespace sparsepde
