#pragma once

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

#include "sparsepde/rng.hpp"

namespace sparsepde {

// RL observation s = [measurements, params].
struct AgentState {
  Eigen::VectorXd measurements;
  Eigen::VectorXd params;

  Eigen::VectorXd concat() const;
  int dim() const { return static_cast<int>(measurements.size() + params.size()); }
};

// Normalized actuator commands, each entry in [-1, 1].
using Action = Eigen::VectorXd;

// Gaussian actuation geometry on a periodic domain. The physical forcing is
// u(x) = sum_i amplitude_scale * a_i * 0.5 * exp(-((x - c_i)/width)^2) with
// periodic distance.
struct ActuationProfile {
  Eigen::VectorXd centers;
  double width = 1.0;
  double amplitude_scale = 1.0;
  double domain_length = 1.0;

  int count() const { return static_cast<int>(centers.size()); }
};

struct RewardConfig {
  double y_ref = 0.0;
  double u_ref = 0.0;
  double alpha_cost = 0.1;
};

struct RewardBreakdown {
  double reward = 0.0;
  double state_cost = 0.0;   // c1
  double action_cost = 0.0;  // c2, unscaled
};

struct Transition {
  AgentState state;
  Action action;
  double reward = 0.0;
  AgentState next_state;
  bool done = false;
};

struct StepResult {
  AgentState state;
  double reward = 0.0;
  bool done = false;
  RewardBreakdown costs;
};

Eigen::VectorXd build_actuation_field(const Action& a, const ActuationProfile& profile,
                                      const Eigen::VectorXd& grid);

Eigen::VectorXd measure(const Eigen::VectorXd& field_values, const std::vector<int>& sensor_indices);

// R = -(mean((y - y_ref)^2) + alpha * mean((g(a_j) - u_ref)^2)); the action
// term uses physical actuator amplitudes g(a) = amplitude_scale * a.
RewardBreakdown compute_reward(const Eigen::VectorXd& field_values, const Action& a,
                               const RewardConfig& cfg, const ActuationProfile& profile);

// Gaussian noise on the measurements only; params stay exact.
AgentState add_measurement_noise(const AgentState& s, double sigma, Rng& rng);

// Reward used when the solver produces non-finite values.
inline constexpr double kDivergenceReward = -1e6;

// Environment contract shared by the PDE problems (and by the synthetic
// test environments). An instance is single-owner: reset/step mutate it.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual int n_sensors() const = 0;
  virtual int n_params() const = 0;
  virtual int n_actions() const = 0;
  virtual double max_amplitude() const = 0;
  virtual std::vector<std::string> param_names() const = 0;

  // Per-dimension (lower, upper) physical parameter bounds.
  virtual std::pair<Eigen::VectorXd, Eigen::VectorXd> parameter_box() const = 0;

  virtual AgentState reset(const Eigen::VectorXd& parameter_sample, std::uint64_t seed) = 0;
  virtual StepResult step(const Action& a) = 0;

  virtual bool done() const = 0;
  virtual bool diverged() const = 0;
  virtual double time() const = 0;
  virtual const Eigen::VectorXd& field_values() const = 0;

  std::vector<std::string> state_variable_names() const;
};

}  // namespace sparsepde
