#include "sparsepde/ks_solver.hpp"

#include <cmath>
#include <numbers>

#include "sparsepde/errors.hpp"

namespace sparsepde {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const KsConfig& cfg) {
  if (cfg.domain_length <= 0.0 || cfg.dt <= 0.0) {
    throw ConfigError("KsConfig: domain_length and dt must be positive");
  }
  if (cfg.grid_size < 4 || (cfg.grid_size & (cfg.grid_size - 1)) != 0) {
    throw ConfigError("KsConfig: grid_size must be a power of two");
  }
}

}  // namespace

Eigen::VectorXd ks_grid(const KsConfig& cfg) {
  validate(cfg);
  Eigen::VectorXd x(cfg.grid_size);
  for (int k = 0; k < cfg.grid_size; ++k) {
    x[k] = cfg.domain_length * k / cfg.grid_size;
  }
  return x;
}

Eigen::VectorXcd ks_linear_symbol(const KsConfig& cfg) {
  validate(cfg);
  const int bins = cfg.grid_size / 2 + 1;
  Eigen::VectorXcd lambda(bins);
  for (int n = 0; n < bins; ++n) {
    const double q = 2.0 * kPi * n / cfg.domain_length;
    const double q2 = q * q;
    lambda[n] = std::complex<double>(q2 - q2 * q2, 0.0);
  }
  return lambda;
}

Etdrk4Tables etdrk4_tables(const Eigen::VectorXd& lambda, double dt, int contour_points) {
  const Eigen::Index n = lambda.size();
  Etdrk4Tables t;
  t.E.resize(n);
  t.E2.resize(n);
  t.Q.resize(n);
  t.f1.resize(n);
  t.f2.resize(n);
  t.f3.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double z = lambda[i] * dt;
    t.E[i] = std::exp(z);
    t.E2[i] = std::exp(0.5 * z);
    std::complex<double> q_sum = 0.0, f1_sum = 0.0, f2_sum = 0.0, f3_sum = 0.0;
    for (int j = 0; j < contour_points; ++j) {
      const double theta = 2.0 * kPi * (j + 0.5) / contour_points;
      const std::complex<double> lr = z + std::polar(1.0, theta);
      const std::complex<double> lr2 = lr * lr;
      const std::complex<double> lr3 = lr2 * lr;
      const std::complex<double> elr = std::exp(lr);
      q_sum += (std::exp(0.5 * lr) - 1.0) / lr;
      f1_sum += (-4.0 - lr + elr * (4.0 - 3.0 * lr + lr2)) / lr3;
      f2_sum += (2.0 + lr + elr * (-2.0 + lr)) / lr3;
      f3_sum += (-4.0 - 3.0 * lr - lr2 + elr * (4.0 - lr)) / lr3;
    }
    const double scale = dt / contour_points;
    t.Q[i] = scale * q_sum.real();
    t.f1[i] = scale * f1_sum.real();
    t.f2[i] = scale * f2_sum.real();
    t.f3[i] = scale * f3_sum.real();
  }
  return t;
}

double etdrk4_phi1(double z, int contour_points) {
  std::complex<double> sum = 0.0;
  for (int j = 0; j < contour_points; ++j) {
    const double theta = 2.0 * kPi * (j + 0.5) / contour_points;
    const std::complex<double> lr = z + std::polar(1.0, theta);
    sum += (std::exp(lr) - 1.0) / lr;
  }
  return (sum / static_cast<double>(contour_points)).real();
}

Etdrk4Tables ks_phi_coefficients(const KsConfig& cfg) {
  return etdrk4_tables(ks_linear_symbol(cfg).real(), cfg.dt);
}

KsSolver::KsSolver(const KsConfig& cfg)
    : cfg_(cfg),
      grid_(ks_grid(cfg)),
      tables_(ks_phi_coefficients(cfg)),
      fft_(cfg.grid_size) {
  cos_profile_ = (4.0 * kPi / cfg_.domain_length * grid_.array()).cos();
  const int bins = fft_.spectrum_size();
  deriv_.resize(bins);
  dealias_.resize(bins);
  const int cutoff = cfg_.grid_size / 3;  // 2/3 rule on the half spectrum
  for (int n = 0; n < bins; ++n) {
    const double q = 2.0 * kPi * n / cfg_.domain_length;
    const bool nyquist = (n == cfg_.grid_size / 2);
    deriv_[n] = nyquist ? 0.0 : std::complex<double>(0.0, q);
    dealias_[n] = (n <= cutoff && !nyquist) ? 1.0 : 0.0;
  }
}

Eigen::VectorXcd KsSolver::nonlinear(const Eigen::VectorXcd& v,
                                     const Eigen::VectorXcd& forcing_hat) {
  const Eigen::VectorXd y = fft_.inverse(v);
  Eigen::VectorXcd sq = fft_.forward(y.cwiseProduct(y));
  // N(y) = -1/2 d(y^2)/dx + (u - mu cos)
  return (-0.5 * deriv_.array() * dealias_.array() * sq.array() + forcing_hat.array()).matrix();
}

void KsSolver::step(PdeField& field, const Eigen::VectorXd& forcing) {
  if (forcing.size() != cfg_.grid_size || field.values.size() != cfg_.grid_size) {
    throw ConfigError("KsSolver::step: field/forcing size mismatch");
  }
  const Eigen::VectorXcd forcing_hat =
      fft_.forward(forcing - cfg_.mu * cos_profile_);

  Eigen::VectorXcd v = fft_.forward(field.values);
  const Eigen::VectorXcd nv = nonlinear(v, forcing_hat);
  const Eigen::VectorXcd a = tables_.E2.array() * v.array() + tables_.Q.array() * nv.array();
  const Eigen::VectorXcd na = nonlinear(a, forcing_hat);
  const Eigen::VectorXcd b = tables_.E2.array() * v.array() + tables_.Q.array() * na.array();
  const Eigen::VectorXcd nb = nonlinear(b, forcing_hat);
  const Eigen::VectorXcd c =
      tables_.E2.array() * a.array() + tables_.Q.array() * (2.0 * nb.array() - nv.array());
  const Eigen::VectorXcd nc = nonlinear(c, forcing_hat);

  Eigen::VectorXcd next = (tables_.E.array() * v.array() + tables_.f1.array() * nv.array() +
                           2.0 * tables_.f2.array() * (na.array() + nb.array()) +
                           tables_.f3.array() * nc.array())
                              .matrix();
  next[cfg_.grid_size / 2] = 0.0;  // drop the Nyquist mode

  field.values = fft_.inverse(next);
  field.time += cfg_.dt;
  if (!field.values.allFinite()) {
    throw DivergenceError("KsSolver::step: non-finite field at t=" + std::to_string(field.time));
  }
}

}  // namespace sparsepde
