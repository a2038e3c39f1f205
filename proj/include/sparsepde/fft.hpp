#pragma once

#include <Eigen/Core>
#include <complex>

namespace sparsepde {

// Real-to-complex FFT pair of fixed size n, backed by FFTW. Forward is
// unnormalized; inverse divides by n, so inverse(forward(x)) == x.
// The half spectrum has n/2 + 1 bins. Each instance owns its plans and
// scratch buffers; plan creation/destruction is serialized internally, so
// independent instances may run on different threads.
class RealFft {
 public:
  explicit RealFft(int n);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  int size() const { return n_; }
  int spectrum_size() const { return n_ / 2 + 1; }

  Eigen::VectorXcd forward(const Eigen::VectorXd& in);
  Eigen::VectorXd inverse(const Eigen::VectorXcd& in);

 private:
  int n_;
  double* real_buf_;
  void* complex_buf_;
  void* forward_plan_;
  void* inverse_plan_;
};

}  // namespace sparsepde
