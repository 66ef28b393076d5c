#pragma once

#include <vector>

#include "sdfrecon/math.hpp"

namespace sdfrecon {

enum class Activation { None, ReLU, Sigmoid };

struct LayerSpec {
  int out = 0;
  Activation act = Activation::None;
};

struct GradientBundle {
  double value = 0.0;
  std::vector<MatrixXd> weight_grads;
  std::vector<VectorXd> bias_grads;
  bool has_input_grad = false;
  MatrixXd input_grad;  // input_dim x batch

  void add(const GradientBundle& other);
  void scale(double s);
  double squared_norm() const;
  bool all_finite() const;
};

// Small fully connected network with explicit parameter storage and
// hand-derived reverse-mode gradients for parameters and inputs. The
// optional skip connection concatenates the network input at layer
// `skip_layer` (scaled by 1/sqrt(2) to preserve variance).
class DenseNetwork {
 public:
  struct Layer {
    MatrixXd w;  // out x in
    VectorXd b;
    Activation act = Activation::None;
  };

  DenseNetwork() = default;
  DenseNetwork(int input_dim, std::vector<LayerSpec> specs, int skip_layer = -1);

  int input_dim() const { return input_dim_; }
  int output_dim() const { return layers_.empty() ? input_dim_ : static_cast<int>(layers_.back().w.rows()); }
  int skip_layer() const { return skip_layer_; }
  int layer_count() const { return static_cast<int>(layers_.size()); }
  std::vector<Layer>& layers() { return layers_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t parameter_count() const;

  VectorXd forward(const VectorXd& input) const;

  struct Trace {
    std::vector<MatrixXd> inputs;  // actual (post-concat, post-scale) input of each layer
    std::vector<MatrixXd> pre;     // pre-activation of each layer
    std::vector<MatrixXd> post;    // post-activation of each layer
    MatrixXd x;                    // network input
  };

  MatrixXd forward_batch(const MatrixXd& x, Trace* trace = nullptr) const;

  // Accumulates parameter gradients (and optionally input gradients) for
  // upstream = dL/d(output), one column per batch element.
  void backward_batch(const Trace& trace, const MatrixXd& upstream, GradientBundle& accum,
                      MatrixXd* input_grad = nullptr) const;

  GradientBundle backward(const VectorXd& input, const VectorXd& upstream) const;

  // ---- scalar-output helpers (input gradients and their parameter grads) ----

  struct InputGradTrace {
    std::vector<MatrixXd> p;  // per layer: upstream at the pre-activation
  };

  // d(output)/d(input) per column; requires output_dim() == 1.
  MatrixXd input_gradient_batch(const Trace& trace, InputGradTrace* keep = nullptr) const;

  // Accumulates dL/d(params) where L depends on the input gradient g via
  // rbar0 = dL/dg (input_dim x batch). Valid for ReLU/None activations only
  // (their second derivative vanishes, which the derivation relies on).
  void input_gradient_param_backward(const Trace& trace, const InputGradTrace& ig,
                                     const MatrixXd& rbar0, GradientBundle& accum) const;

  GradientBundle make_bundle() const;

 private:
  int layer_input_dim(int k) const;

  int input_dim_ = 0;
  int skip_layer_ = -1;
  std::vector<Layer> layers_;
};

MatrixXd apply_activation(Activation act, const MatrixXd& pre);
MatrixXd activation_derivative(Activation act, const MatrixXd& pre, const MatrixXd& post);

}  // namespace sdfrecon
