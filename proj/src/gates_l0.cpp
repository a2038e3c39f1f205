#include "sparsepde/gates_l0.hpp"

#include <cmath>

namespace sparsepde {

namespace {

inline Eigen::ArrayXXd sigmoid(const Eigen::ArrayXXd& x) {
  return 1.0 / (1.0 + (-x).exp());
}

}  // namespace

GateParams GateParams::create(int rows, int cols, double init_mean, double init_std, Rng& rng) {
  GateParams gp;
  gp.log_alpha.resize(rows, cols);
  std::normal_distribution<double> dist(init_mean, init_std);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) gp.log_alpha(i, j) = dist(rng);
  }
  return gp;
}

Eigen::ArrayXXd draw_gate_noise(const GateParams& gp, Rng& rng) {
  Eigen::ArrayXXd u(gp.log_alpha.rows(), gp.log_alpha.cols());
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      double v = dist(rng);
      u(i, j) = std::min(std::max(v, 1e-12), 1.0 - 1e-12);
    }
  }
  return u;
}

GateSample sample_gates_from_uniform(const GateParams& gp, const Eigen::ArrayXXd& u) {
  const double beta = gp.temperature;
  const double span = gp.stretch_hi - gp.stretch_lo;
  const Eigen::ArrayXXd logits = (u.log() - (1.0 - u).log() + gp.log_alpha) / beta;
  const Eigen::ArrayXXd s = sigmoid(logits);
  const Eigen::ArrayXXd d = s * span + gp.stretch_lo;
  GateSample out;
  out.z = d.min(1.0).max(0.0);
  const Eigen::ArrayXXd interior = ((d > 0.0) && (d < 1.0)).cast<double>();
  out.dz_dlog_alpha = interior * s * (1.0 - s) * (span / beta);
  return out;
}

GateSample sample_gates(const GateParams& gp, Rng& rng) {
  return sample_gates_from_uniform(gp, draw_gate_noise(gp, rng));
}

Eigen::ArrayXXd active_probability(const GateParams& gp) {
  // Eq. for P(z != 0); note the stretch ratio enters as -gamma/zeta since
  // gamma < 0.
  const double shift = gp.temperature * std::log(-gp.stretch_lo / gp.stretch_hi);
  return sigmoid(gp.log_alpha - shift);
}

double l0_penalty(const GateParams& gp) {
  return active_probability(gp).sum();
}

Eigen::ArrayXXd l0_penalty_grad(const GateParams& gp) {
  const Eigen::ArrayXXd p = active_probability(gp);
  return p * (1.0 - p);
}

Eigen::ArrayXXd deterministic_mask(const GateParams& gp) {
  const double span = gp.stretch_hi - gp.stretch_lo;
  const Eigen::ArrayXXd d = sigmoid(gp.log_alpha) * span + gp.stretch_lo;
  return d.min(1.0).max(0.0);
}

}  // namespace sparsepde
