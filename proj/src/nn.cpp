#include "sparsepde/nn.hpp"

#include <cmath>
#include <stdexcept>

#include "sparsepde/errors.hpp"

namespace sparsepde {

namespace {

void apply_activation(Eigen::MatrixXd& z, Activation act) {
  switch (act) {
    case Activation::Relu:
      z = z.cwiseMax(0.0);
      break;
    case Activation::Tanh:
      z = z.array().tanh().matrix();
      break;
    case Activation::Identity:
      break;
  }
}

// Derivative expressed through the cached activation value.
Eigen::ArrayXXd activation_grad(const Eigen::MatrixXd& activated, Activation act) {
  switch (act) {
    case Activation::Relu:
      return (activated.array() > 0.0).cast<double>();
    case Activation::Tanh:
      return 1.0 - activated.array().square();
    case Activation::Identity:
      return Eigen::ArrayXXd::Ones(activated.rows(), activated.cols());
  }
  return {};
}

}  // namespace

Mlp Mlp::create(const std::vector<int>& layer_sizes, Activation hidden, Activation output,
                Rng& rng) {
  if (layer_sizes.size() < 2) throw ConfigError("Mlp needs at least input and output sizes");
  Mlp net;
  for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    const int in = layer_sizes[l];
    const int out = layer_sizes[l + 1];
    // uniform fan-in init, +/- 1/sqrt(in)
    const double limit = 1.0 / std::sqrt(static_cast<double>(in));
    std::uniform_real_distribution<double> dist(-limit, limit);
    Eigen::MatrixXd w(out, in);
    for (int j = 0; j < in; ++j) {
      for (int i = 0; i < out; ++i) w(i, j) = dist(rng);
    }
    Eigen::VectorXd b(out);
    for (int i = 0; i < out; ++i) b[i] = dist(rng);
    net.weights.push_back(std::move(w));
    net.biases.push_back(std::move(b));
    net.activations.push_back(l + 2 == layer_sizes.size() ? output : hidden);
  }
  return net;
}

Eigen::MatrixXd mlp_forward(const Mlp& net, const Eigen::MatrixXd& x, GradientTape* tape) {
  if (x.rows() != net.input_dim()) throw ConfigError("mlp_forward: input dimension mismatch");
  if (tape) {
    tape->layer_inputs.clear();
    tape->consumed = false;
  }
  Eigen::MatrixXd a = x;
  for (int l = 0; l < net.layer_count(); ++l) {
    if (tape) tape->layer_inputs.push_back(a);
    Eigen::MatrixXd z = (net.weights[l] * a).colwise() + net.biases[l];
    apply_activation(z, net.activations[l]);
    a = std::move(z);
  }
  if (tape) tape->output = a;
  return a;
}

MlpGrads mlp_backward(const Mlp& net, GradientTape& tape, const Eigen::MatrixXd& upstream,
                      Eigen::MatrixXd* input_grad) {
  if (tape.consumed) throw std::logic_error("mlp_backward: tape already consumed");
  if (static_cast<int>(tape.layer_inputs.size()) != net.layer_count()) {
    throw std::logic_error("mlp_backward: tape does not match network");
  }
  if (upstream.rows() != net.output_dim() || upstream.cols() != tape.output.cols()) {
    throw ConfigError("mlp_backward: upstream shape mismatch");
  }
  tape.consumed = true;

  MlpGrads grads;
  grads.weights.resize(net.layer_count());
  grads.biases.resize(net.layer_count());

  Eigen::MatrixXd delta = upstream;
  for (int l = net.layer_count() - 1; l >= 0; --l) {
    const Eigen::MatrixXd& activated = (l == net.layer_count() - 1)
                                           ? tape.output
                                           : tape.layer_inputs[l + 1];
    delta.array() *= activation_grad(activated, net.activations[l]);
    grads.weights[l].noalias() = delta * tape.layer_inputs[l].transpose();
    grads.biases[l] = delta.rowwise().sum();
    if (l > 0 || input_grad) {
      Eigen::MatrixXd next = net.weights[l].transpose() * delta;
      if (l == 0) {
        *input_grad = std::move(next);
      } else {
        delta = std::move(next);
      }
    }
  }
  return grads;
}

TensorAdam::TensorAdam(Eigen::Index rows, Eigen::Index cols)
    : m(Eigen::ArrayXXd::Zero(rows, cols)), v(Eigen::ArrayXXd::Zero(rows, cols)) {}

void TensorAdam::update(Eigen::Ref<Eigen::MatrixXd> param, const Eigen::MatrixXd& grad,
                        const AdamConfig& cfg) {
  if (param.rows() != grad.rows() || param.cols() != grad.cols()) {
    throw ConfigError("adam: gradient shape mismatch");
  }
  if (!grad.allFinite()) {
    throw DivergenceError("adam: non-finite gradient (rows=" + std::to_string(grad.rows()) +
                          ", cols=" + std::to_string(grad.cols()) + ")");
  }
  ++step_;
  const Eigen::ArrayXXd g = grad.array();
  m = cfg.beta1 * m + (1.0 - cfg.beta1) * g;
  v = cfg.beta2 * v + (1.0 - cfg.beta2) * g.square();
  const double mc = 1.0 - std::pow(cfg.beta1, static_cast<double>(step_));
  const double vc = 1.0 - std::pow(cfg.beta2, static_cast<double>(step_));
  param.array() -= cfg.learning_rate * (m / mc) / ((v / vc).sqrt() + cfg.epsilon);
}

MlpAdam::MlpAdam(const Mlp& net) {
  for (const auto& w : net.weights) weight_states.emplace_back(w.rows(), w.cols());
  for (const auto& b : net.biases) bias_states.emplace_back(b.rows(), 1);
}

void MlpAdam::update(Mlp& net, const MlpGrads& grads, const AdamConfig& cfg) {
  for (int l = 0; l < net.layer_count(); ++l) {
    weight_states[l].update(net.weights[l], grads.weights[l], cfg);
    bias_states[l].update(net.biases[l], grads.biases[l], cfg);
  }
}

void soft_update(Eigen::Ref<Eigen::MatrixXd> target, const Eigen::MatrixXd& online, double rho) {
  target = rho * online + (1.0 - rho) * target;
}

void soft_update(Mlp& target, const Mlp& online, double rho) {
  for (int l = 0; l < target.layer_count(); ++l) {
    soft_update(target.weights[l], online.weights[l], rho);
    soft_update(target.biases[l], online.biases[l], rho);
  }
}

}  // namespace sparsepde
