#pragma once

#include <Eigen/Core>

#include "sparsepde/rng.hpp"

namespace sparsepde {

// Hard-concrete gates: a binary-concrete variable stretched to
// (stretch_lo, stretch_hi) and clamped to [0, 1], so a gate attains exactly
// 0 or 1 with positive probability while staying differentiable in
// log_alpha on the interior.
struct GateParams {
  Eigen::ArrayXXd log_alpha;
  double temperature = 2.0 / 3.0;  // beta
  double stretch_lo = -0.1;        // gamma, < 0
  double stretch_hi = 1.1;         // zeta, > 1

  static GateParams create(int rows, int cols, double init_mean, double init_std, Rng& rng);
};

// One reparameterized training sample. dz_dlog_alpha carries the pathwise
// derivative; it is zero wherever the clamp saturated.
struct GateSample {
  Eigen::ArrayXXd z;
  Eigen::ArrayXXd dz_dlog_alpha;
};

GateSample sample_gates_from_uniform(const GateParams& gp, const Eigen::ArrayXXd& u);
GateSample sample_gates(const GateParams& gp, Rng& rng);

// Uniform draws in (0, 1), shaped like the gate matrix. Kept separate so
// tests can freeze the noise (common random numbers) across evaluations.
Eigen::ArrayXXd draw_gate_noise(const GateParams& gp, Rng& rng);

// P(z != 0) = sigmoid(log_alpha - beta * log(-gamma/zeta))
Eigen::ArrayXXd active_probability(const GateParams& gp);

// Expected L0 norm: sum of active probabilities.
double l0_penalty(const GateParams& gp);
Eigen::ArrayXXd l0_penalty_grad(const GateParams& gp);

// Test-time gate: clamp(sigmoid(log_alpha) * (zeta - gamma) + gamma, 0, 1).
Eigen::ArrayXXd deterministic_mask(const GateParams& gp);

}  // namespace sparsepde
