#include "sparsepde/pde_env.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sparsepde/errors.hpp"

namespace sparsepde {

namespace {

constexpr double kPi = std::numbers::pi;

long steps_from_times(double total, double dt, const char* what) {
  const double ratio = total / dt;
  const long n = std::lround(ratio);
  if (n < 0 || std::abs(ratio - n) > 1e-9) {
    throw ConfigError(std::string(what) + " is not an integer multiple of the step size");
  }
  return n;
}

}  // namespace

Eigen::VectorXd random_initial_condition(const Eigen::VectorXd& grid, double domain_length,
                                         Rng& rng) {
  std::uniform_real_distribution<double> amp_dist(-0.5, 0.5);
  std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * kPi);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(grid.size());
  for (int mode = 1; mode <= 3; ++mode) {
    const double amplitude = amp_dist(rng);
    const double phase = phase_dist(rng);
    y += (amplitude *
          (2.0 * kPi * mode / domain_length * grid.array() + phase).cos())
             .matrix();
  }
  return y;
}

PdeEnvBase::PdeEnvBase(const PdeEnvOptions& opts, double solver_dt, double domain_length,
                       int grid_size)
    : opts_(opts) {
  if (opts_.n_sensors < 1 || opts_.n_actuators < 1) {
    throw ConfigError("environment needs at least one sensor and one actuator");
  }
  if (grid_size % opts_.n_sensors != 0 || grid_size % opts_.n_actuators != 0) {
    throw ConfigError("grid size must be divisible by sensor and actuator counts");
  }
  if (opts_.kernel_width <= 0.0 || opts_.max_amplitude <= 0.0) {
    throw ConfigError("kernel width and max amplitude must be positive");
  }
  substeps_per_control_ = steps_from_times(opts_.dt_control, solver_dt, "dt_control");
  warmup_substeps_ = steps_from_times(opts_.warmup_time, solver_dt, "warmup_time");
  n_control_steps_ = steps_from_times(opts_.t_final - opts_.warmup_time, opts_.dt_control,
                                      "control window");
  if (substeps_per_control_ < 1 || n_control_steps_ < 1) {
    throw ConfigError("episode timing leaves no control steps");
  }
  profile_.width = opts_.kernel_width;
  profile_.amplitude_scale = opts_.max_amplitude;
  profile_.domain_length = domain_length;
}

void PdeEnvBase::init_geometry(const Eigen::VectorXd& grid) {
  const int n = static_cast<int>(grid.size());
  sensors_.clear();
  for (int k = 0; k < opts_.n_sensors; ++k) sensors_.push_back(k * n / opts_.n_sensors);
  profile_.centers.resize(opts_.n_actuators);
  for (int k = 0; k < opts_.n_actuators; ++k) profile_.centers[k] = grid[k * n / opts_.n_actuators];
}

AgentState PdeEnvBase::observe() const {
  return AgentState{measure(field_.values, sensors_), params_};
}

AgentState PdeEnvBase::reset(const Eigen::VectorXd& parameter_sample, std::uint64_t seed) {
  const auto [lo, hi] = parameter_box();
  if (parameter_sample.size() != lo.size()) {
    throw ConfigError("reset: parameter sample has wrong dimension");
  }
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (parameter_sample[i] < lo[i] || parameter_sample[i] > hi[i]) {
      throw ConfigError("reset: parameter outside the declared box");
    }
  }
  params_ = parameter_sample;
  apply_parameters(params_);

  Rng rng(seed);
  field_.values = random_initial_condition(grid(), profile_.domain_length, rng);
  field_.time = 0.0;
  control_step_ = 0;
  started_ = true;
  done_ = false;
  diverged_ = false;

  const Eigen::VectorXd zero_forcing = Eigen::VectorXd::Zero(grid().size());
  for (long i = 0; i < warmup_substeps_; ++i) advance(field_, zero_forcing);
  return observe();
}

StepResult PdeEnvBase::step(const Action& a) {
  if (!started_) throw std::logic_error("step before reset");
  if (done_) throw std::logic_error("step after episode end");
  if (a.size() != opts_.n_actuators) throw ConfigError("step: action has wrong dimension");

  const Action clipped = a.cwiseMax(-1.0).cwiseMin(1.0);
  const Eigen::VectorXd forcing = build_actuation_field(clipped, profile_, grid());

  StepResult out;
  try {
    for (long i = 0; i < substeps_per_control_; ++i) advance(field_, forcing);
  } catch (const DivergenceError&) {
    diverged_ = true;
  }
  ++control_step_;

  if (diverged_) {
    done_ = true;
    field_.values.setZero();
    out.state = observe();
    out.reward = kDivergenceReward;
    out.done = true;
    out.costs = RewardBreakdown{kDivergenceReward, -kDivergenceReward, 0.0};
    return out;
  }

  out.costs = compute_reward(field_.values, clipped, reward_cfg_, profile_);
  out.reward = out.costs.reward;
  done_ = control_step_ >= n_control_steps_;
  out.done = done_;
  out.state = observe();
  return out;
}

KsEnv::KsEnv(const KsConfig& solver_cfg, const PdeEnvOptions& opts)
    : PdeEnvBase(opts, solver_cfg.dt, solver_cfg.domain_length, solver_cfg.grid_size),
      solver_(solver_cfg) {
  init_geometry(solver_.grid());
}

PdeEnvOptions KsEnv::default_options() {
  PdeEnvOptions o;
  o.t_final = 300.0;
  o.warmup_time = 100.0;
  o.dt_control = 0.2;
  o.n_sensors = 8;
  o.n_actuators = 8;
  o.kernel_width = 0.8;
  o.max_amplitude = 1.0;
  return o;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> KsEnv::parameter_box() const {
  Eigen::VectorXd lo(1), hi(1);
  lo << -0.25;
  hi << 0.25;
  return {lo, hi};
}

void KsEnv::apply_parameters(const Eigen::VectorXd& params) {
  solver_.set_mu(params[0]);
}

void KsEnv::advance(PdeField& field, const Eigen::VectorXd& forcing) {
  solver_.step(field, forcing);
}

CdrEnv::CdrEnv(const CdrConfig& solver_cfg, const PdeEnvOptions& opts)
    : PdeEnvBase(opts, solver_cfg.dt, solver_cfg.domain_length, solver_cfg.grid_size),
      solver_(solver_cfg) {
  init_geometry(solver_.grid());
}

PdeEnvOptions CdrEnv::default_options() {
  PdeEnvOptions o;
  o.t_final = 15.0;
  o.warmup_time = 5.0;
  o.dt_control = 0.2;
  o.n_sensors = 8;
  o.n_actuators = 8;
  // Gaussian actuator width 2.5 in grid-index units: 2.5 * dx with L = 1,
  // N = 200. A physical width of 2.5 would exceed the whole domain.
  o.kernel_width = 2.5 * (1.0 / 200.0);
  o.max_amplitude = 0.25;
  return o;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> CdrEnv::parameter_box() const {
  Eigen::VectorXd lo(3), hi(3);
  lo << 0.001, 0.1, 0.1;
  hi << 0.008, 0.35, 0.35;
  return {lo, hi};
}

void CdrEnv::apply_parameters(const Eigen::VectorXd& params) {
  solver_.set_parameters(params[0], params[1], params[2]);
}

void CdrEnv::advance(PdeField& field, const Eigen::VectorXd& forcing) {
  solver_.step(field, forcing);
}

}  // namespace sparsepde
