#include "sparsepde/env_core.hpp"

#include <cmath>

#include "sparsepde/dictionary.hpp"
#include "sparsepde/errors.hpp"

namespace sparsepde {

Eigen::VectorXd AgentState::concat() const {
  Eigen::VectorXd s(dim());
  s << measurements, params;
  return s;
}

Eigen::VectorXd build_actuation_field(const Action& a, const ActuationProfile& profile,
                                      const Eigen::VectorXd& grid) {
  if (a.size() != profile.centers.size()) {
    throw ConfigError("build_actuation_field: action size does not match actuator count");
  }
  if (profile.width <= 0.0 || profile.amplitude_scale <= 0.0) {
    throw ConfigError("build_actuation_field: invalid actuation profile");
  }
  const double L = profile.domain_length;
  Eigen::VectorXd u = Eigen::VectorXd::Zero(grid.size());
  for (int i = 0; i < profile.count(); ++i) {
    const double amplitude = profile.amplitude_scale * a[i];
    if (amplitude == 0.0) continue;
    const double c = profile.centers[i];
    for (Eigen::Index k = 0; k < grid.size(); ++k) {
      const double direct = std::abs(grid[k] - c);
      const double dist = std::min(direct, L - direct);
      const double r = dist / profile.width;
      u[k] += amplitude * 0.5 * std::exp(-r * r);
    }
  }
  return u;
}

Eigen::VectorXd measure(const Eigen::VectorXd& field_values,
                        const std::vector<int>& sensor_indices) {
  Eigen::VectorXd m(static_cast<Eigen::Index>(sensor_indices.size()));
  for (std::size_t i = 0; i < sensor_indices.size(); ++i) {
    const int k = sensor_indices[i];
    if (k < 0 || k >= field_values.size()) {
      throw ConfigError("measure: sensor index out of range");
    }
    m[static_cast<Eigen::Index>(i)] = field_values[k];
  }
  return m;
}

RewardBreakdown compute_reward(const Eigen::VectorXd& field_values, const Action& a,
                               const RewardConfig& cfg, const ActuationProfile& profile) {
  if (!field_values.allFinite()) {
    throw DivergenceError("compute_reward: non-finite field values");
  }
  RewardBreakdown out;
  out.state_cost = (field_values.array() - cfg.y_ref).square().mean();
  const Eigen::ArrayXd amplitudes = profile.amplitude_scale * a.array();
  out.action_cost = (amplitudes - cfg.u_ref).square().mean();
  out.reward = -(out.state_cost + cfg.alpha_cost * out.action_cost);
  return out;
}

AgentState add_measurement_noise(const AgentState& s, double sigma, Rng& rng) {
  if (sigma < 0.0) throw ConfigError("add_measurement_noise: sigma must be >= 0");
  AgentState noisy = s;
  if (sigma > 0.0) {
    std::normal_distribution<double> dist(0.0, sigma);
    for (Eigen::Index i = 0; i < noisy.measurements.size(); ++i) {
      noisy.measurements[i] += dist(rng);
    }
  }
  return noisy;
}

std::vector<std::string> Environment::state_variable_names() const {
  return sparsepde::state_variable_names(n_sensors(), param_names());
}

}  // namespace sparsepde
