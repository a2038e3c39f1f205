#pragma once

#include <Eigen/Core>
#include <complex>

#include "sparsepde/fft.hpp"
#include "sparsepde/pde_field.hpp"

namespace sparsepde {

// Linear parametric convection-diffusion-reaction equation on a periodic
// domain:
//   y_t = -c y_x + nu y_xx + r y + u(x, t)
struct CdrConfig {
  double domain_length = 1.0;
  int grid_size = 200;
  double dt = 0.1;
  double nu = 0.005;
  double c = 0.2;
  double r = 0.15;
};

Eigen::VectorXd cdr_grid(const CdrConfig& cfg);

// lambda(k) = -i c k - nu k^2 + r over k_n = 2 pi n / L, n = 0..N/2.
Eigen::VectorXcd cdr_linear_symbol(const CdrConfig& cfg);

// phi1(z) = (e^z - 1)/z with a 4th-order Taylor branch for |z| < 1e-4.
std::complex<double> cdr_phi1(std::complex<double> z);

// Exact per-mode exponential update under zero-order-hold forcing:
//   y_hat <- e^{lambda dt} y_hat + dt phi1(lambda dt) u_hat
class CdrSolver {
 public:
  explicit CdrSolver(const CdrConfig& cfg);

  const CdrConfig& config() const { return cfg_; }
  const Eigen::VectorXd& grid() const { return grid_; }

  void set_parameters(double nu, double c, double r);

  void step(PdeField& field, const Eigen::VectorXd& forcing);

 private:
  void build_propagator();

  CdrConfig cfg_;
  Eigen::VectorXd grid_;
  Eigen::VectorXcd propagator_;   // e^{lambda dt}, Nyquist zeroed
  Eigen::VectorXcd forcing_mul_;  // dt phi1(lambda dt), Nyquist zeroed
  RealFft fft_;
};

}  // namespace sparsepde
