#include "sparsepde/cdr_solver.hpp"

#include <cmath>
#include <numbers>

#include "sparsepde/errors.hpp"

namespace sparsepde {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const CdrConfig& cfg) {
  if (cfg.domain_length <= 0.0 || cfg.dt <= 0.0) {
    throw ConfigError("CdrConfig: domain_length and dt must be positive");
  }
  if (cfg.grid_size < 4) throw ConfigError("CdrConfig: grid_size too small");
  if (cfg.nu <= 0.0) throw ConfigError("CdrConfig: nu must be positive");
}

}  // namespace

Eigen::VectorXd cdr_grid(const CdrConfig& cfg) {
  validate(cfg);
  Eigen::VectorXd x(cfg.grid_size);
  for (int k = 0; k < cfg.grid_size; ++k) {
    x[k] = cfg.domain_length * k / cfg.grid_size;
  }
  return x;
}

Eigen::VectorXcd cdr_linear_symbol(const CdrConfig& cfg) {
  validate(cfg);
  const int bins = cfg.grid_size / 2 + 1;
  Eigen::VectorXcd lambda(bins);
  for (int n = 0; n < bins; ++n) {
    const double k = 2.0 * kPi * n / cfg.domain_length;
    lambda[n] = std::complex<double>(cfg.r - cfg.nu * k * k, -cfg.c * k);
  }
  return lambda;
}

std::complex<double> cdr_phi1(std::complex<double> z) {
  if (std::abs(z) < 1e-4) {
    return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
  }
  return (std::exp(z) - 1.0) / z;
}

CdrSolver::CdrSolver(const CdrConfig& cfg)
    : cfg_(cfg), grid_(cdr_grid(cfg)), fft_(cfg.grid_size) {
  build_propagator();
}

void CdrSolver::set_parameters(double nu, double c, double r) {
  cfg_.nu = nu;
  cfg_.c = c;
  cfg_.r = r;
  validate(cfg_);
  build_propagator();
}

void CdrSolver::build_propagator() {
  const Eigen::VectorXcd lambda = cdr_linear_symbol(cfg_);
  const int bins = fft_.spectrum_size();
  propagator_.resize(bins);
  forcing_mul_.resize(bins);
  for (int n = 0; n < bins; ++n) {
    const std::complex<double> z = lambda[n] * cfg_.dt;
    const bool nyquist = (n == cfg_.grid_size / 2) && (cfg_.grid_size % 2 == 0);
    propagator_[n] = nyquist ? 0.0 : std::exp(z);
    forcing_mul_[n] = nyquist ? 0.0 : cfg_.dt * cdr_phi1(z);
  }
}

void CdrSolver::step(PdeField& field, const Eigen::VectorXd& forcing) {
  if (forcing.size() != cfg_.grid_size || field.values.size() != cfg_.grid_size) {
    throw ConfigError("CdrSolver::step: field/forcing size mismatch");
  }
  const Eigen::VectorXcd y_hat = fft_.forward(field.values);
  const Eigen::VectorXcd u_hat = fft_.forward(forcing);
  const Eigen::VectorXcd next =
      (propagator_.array() * y_hat.array() + forcing_mul_.array() * u_hat.array()).matrix();
  field.values = fft_.inverse(next);
  field.time += cfg_.dt;
  if (!field.values.allFinite()) {
    throw DivergenceError("CdrSolver::step: non-finite field at t=" + std::to_string(field.time));
  }
}

}  // namespace sparsepde
