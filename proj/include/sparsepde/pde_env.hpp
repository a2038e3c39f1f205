#pragma once

#include <memory>
#include <vector>

#include "sparsepde/cdr_solver.hpp"
#include "sparsepde/env_core.hpp"
#include "sparsepde/ks_solver.hpp"
#include "sparsepde/pde_field.hpp"

namespace sparsepde {

// Episode timing and sensing/actuation geometry shared by both PDEs.
struct PdeEnvOptions {
  double t_final = 0.0;
  double warmup_time = 0.0;
  double dt_control = 0.2;
  int n_sensors = 8;
  int n_actuators = 8;
  double kernel_width = 1.0;    // physical units
  double max_amplitude = 1.0;   // a_max in u = a_max * a
};

// Smooth random initial condition: first three cosine modes with amplitudes
// ~ U(-0.5, 0.5) and phases ~ U(0, 2 pi), drawn in mode order.
Eigen::VectorXd random_initial_condition(const Eigen::VectorXd& grid, double domain_length,
                                         Rng& rng);

class PdeEnvBase : public Environment {
 public:
  int n_sensors() const override { return opts_.n_sensors; }
  int n_actions() const override { return opts_.n_actuators; }
  double max_amplitude() const override { return opts_.max_amplitude; }

  AgentState reset(const Eigen::VectorXd& parameter_sample, std::uint64_t seed) override;
  StepResult step(const Action& a) override;

  bool done() const override { return done_; }
  bool diverged() const override { return diverged_; }
  double time() const override { return field_.time; }
  const Eigen::VectorXd& field_values() const override { return field_.values; }

  const PdeEnvOptions& options() const { return opts_; }
  const ActuationProfile& actuation_profile() const { return profile_; }
  const std::vector<int>& sensor_indices() const { return sensors_; }
  const RewardConfig& reward_config() const { return reward_cfg_; }
  const Eigen::VectorXd& current_params() const { return params_; }
  long control_steps_per_episode() const { return n_control_steps_; }

  virtual const Eigen::VectorXd& grid() const = 0;

 protected:
  PdeEnvBase(const PdeEnvOptions& opts, double solver_dt, double domain_length, int grid_size);
  void init_geometry(const Eigen::VectorXd& grid);

  virtual void apply_parameters(const Eigen::VectorXd& params) = 0;
  virtual void advance(PdeField& field, const Eigen::VectorXd& forcing) = 0;

  AgentState observe() const;

  PdeEnvOptions opts_;
  RewardConfig reward_cfg_;
  ActuationProfile profile_;
  std::vector<int> sensors_;
  PdeField field_;
  Eigen::VectorXd params_;
  long substeps_per_control_ = 0;
  long warmup_substeps_ = 0;
  long n_control_steps_ = 0;
  long control_step_ = 0;
  bool started_ = false;
  bool done_ = false;
  bool diverged_ = false;
};

// Kuramoto-Sivashinsky control environment; parameter vector is {mu}.
class KsEnv : public PdeEnvBase {
 public:
  explicit KsEnv(const KsConfig& solver_cfg = {}, const PdeEnvOptions& opts = default_options());

  static PdeEnvOptions default_options();

  int n_params() const override { return 1; }
  std::vector<std::string> param_names() const override { return {"μ"}; }
  std::pair<Eigen::VectorXd, Eigen::VectorXd> parameter_box() const override;
  const Eigen::VectorXd& grid() const override { return solver_.grid(); }

 protected:
  void apply_parameters(const Eigen::VectorXd& params) override;
  void advance(PdeField& field, const Eigen::VectorXd& forcing) override;

 private:
  KsSolver solver_;
};

// Convection-diffusion-reaction control environment; parameters are
// {nu, c, r}.
class CdrEnv : public PdeEnvBase {
 public:
  explicit CdrEnv(const CdrConfig& solver_cfg = {}, const PdeEnvOptions& opts = default_options());

  static PdeEnvOptions default_options();

  int n_params() const override { return 3; }
  std::vector<std::string> param_names() const override { return {"ν", "c", "r"}; }
  std::pair<Eigen::VectorXd, Eigen::VectorXd> parameter_box() const override;
  const Eigen::VectorXd& grid() const override { return solver_.grid(); }

 protected:
  void apply_parameters(const Eigen::VectorXd& params) override;
  void advance(PdeField& field, const Eigen::VectorXd& forcing) override;

 private:
  CdrSolver solver_;
};

}  // namespace sparsepde
