#pragma once

#include <Eigen/Core>
#include <complex>

#include "sparsepde/fft.hpp"
#include "sparsepde/pde_field.hpp"

namespace sparsepde {

// Parametric Kuramoto-Sivashinsky equation on a periodic domain:
//   y_t = -y y_x - y_xx - y_xxxx - mu cos(4 pi x / L) + u(x, t)
struct KsConfig {
  double domain_length = 22.0;
  int grid_size = 64;
  double dt = 0.1;
  double mu = 0.0;
};

Eigen::VectorXd ks_grid(const KsConfig& cfg);

// lambda(q) = q^2 - q^4 over the retained rfft wavenumbers q_n = 2 pi n / L,
// n = 0..N/2. Real-valued, returned as complex for interface symmetry with
// the CDR solver.
Eigen::VectorXcd ks_linear_symbol(const KsConfig& cfg);

// Precomputed ETDRK4 coefficients. The phi-function combinations are
// evaluated as means over a 32-point complex contour of unit radius around
// each lambda*dt, which avoids catastrophic cancellation near lambda = 0.
struct Etdrk4Tables {
  Eigen::VectorXd E;   // exp(lambda dt)
  Eigen::VectorXd E2;  // exp(lambda dt / 2)
  Eigen::VectorXd Q;
  Eigen::VectorXd f1;
  Eigen::VectorXd f2;
  Eigen::VectorXd f3;
};

Etdrk4Tables etdrk4_tables(const Eigen::VectorXd& lambda, double dt, int contour_points = 32);

// phi1(z) = (e^z - 1)/z via the same contour averaging (phi1(0) = 1).
double etdrk4_phi1(double z, int contour_points = 32);

Etdrk4Tables ks_phi_coefficients(const KsConfig& cfg);

class KsSolver {
 public:
  explicit KsSolver(const KsConfig& cfg);

  const KsConfig& config() const { return cfg_; }
  const Eigen::VectorXd& grid() const { return grid_; }
  const Etdrk4Tables& tables() const { return tables_; }

  // The linear tables do not depend on mu, so episodes with different
  // parameters reuse the same precomputation.
  void set_mu(double mu) { cfg_.mu = mu; }

  // Advances the field by one dt with the forcing held constant (ETDRK4;
  // the quadratic term is 2/3-rule dealiased). Throws DivergenceError on
  // non-finite results.
  void step(PdeField& field, const Eigen::VectorXd& forcing);

 private:
  Eigen::VectorXcd nonlinear(const Eigen::VectorXcd& v, const Eigen::VectorXcd& forcing_hat);

  KsConfig cfg_;
  Eigen::VectorXd grid_;
  Eigen::VectorXd cos_profile_;  // cos(4 pi x / L)
  Eigen::VectorXcd deriv_;       // i q, Nyquist zeroed
  Eigen::VectorXd dealias_;      // 2/3-rule mask on the product spectrum
  Etdrk4Tables tables_;
  RealFft fft_;
};

}  // namespace sparsepde
