#pragma once

#include <Eigen/Core>
#include <vector>

#include "sparsepde/rng.hpp"

namespace sparsepde {

enum class Activation { Relu, Tanh, Identity };

// Dense network, 64-bit throughout. Batches are column-per-sample so the
// hot path is plain GEMM. weights[l] is (out x in).
struct Mlp {
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;
  std::vector<Activation> activations;

  static Mlp create(const std::vector<int>& layer_sizes, Activation hidden, Activation output,
                    Rng& rng);

  int input_dim() const { return static_cast<int>(weights.front().cols()); }
  int output_dim() const { return static_cast<int>(weights.back().rows()); }
  int layer_count() const { return static_cast<int>(weights.size()); }
};

// Forward activations cached for one backward pass. Reuse is an error.
struct GradientTape {
  std::vector<Eigen::MatrixXd> layer_inputs;  // layer_inputs[0] is x
  Eigen::MatrixXd output;
  bool consumed = false;
};

struct MlpGrads {
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;
};

Eigen::MatrixXd mlp_forward(const Mlp& net, const Eigen::MatrixXd& x, GradientTape* tape = nullptr);

// Reverse-mode pass. upstream is dLoss/dOutput (out x batch); gradients are
// summed over the batch (the caller folds any 1/B into upstream). When
// input_grad is non-null it receives dLoss/dInput, which is what chains the
// critic into the actor.
MlpGrads mlp_backward(const Mlp& net, GradientTape& tape, const Eigen::MatrixXd& upstream,
                      Eigen::MatrixXd* input_grad = nullptr);

struct AdamConfig {
  double learning_rate = 3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Adam state for one tensor. Step count is per tensor; tensors updated in
// lockstep share the same bias correction.
class TensorAdam {
 public:
  TensorAdam() = default;
  TensorAdam(Eigen::Index rows, Eigen::Index cols);

  void update(Eigen::Ref<Eigen::MatrixXd> param, const Eigen::MatrixXd& grad,
              const AdamConfig& cfg);

  long step_count() const { return step_; }

  Eigen::ArrayXXd m, v;

 private:
  long step_ = 0;

  friend struct AdamSerde;
};

// Adam across all tensors of an Mlp.
class MlpAdam {
 public:
  MlpAdam() = default;
  explicit MlpAdam(const Mlp& net);

  void update(Mlp& net, const MlpGrads& grads, const AdamConfig& cfg);

  std::vector<TensorAdam> weight_states;
  std::vector<TensorAdam> bias_states;
};

// Elementwise target <- rho * online + (1 - rho) * target.
void soft_update(Eigen::Ref<Eigen::MatrixXd> target, const Eigen::MatrixXd& online, double rho);
void soft_update(Mlp& target, const Mlp& online, double rho);

struct AdamSerde {
  static long get_step(const TensorAdam& a) { return a.step_; }
  static void set_step(TensorAdam& a, long s) { a.step_ = s; }
};

}  // namespace sparsepde
