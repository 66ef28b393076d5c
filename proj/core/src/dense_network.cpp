#include "sdfrecon/nets/dense_network.hpp"

#include <cmath>
#include <stdexcept>

namespace sdfrecon {

namespace {
constexpr double kSkipScale = 0.70710678118654752440;  // 1/sqrt(2)
}

void GradientBundle::add(const GradientBundle& other) {
  value += other.value;
  for (std::size_t i = 0; i < weight_grads.size(); ++i) {
    weight_grads[i] += other.weight_grads[i];
    bias_grads[i] += other.bias_grads[i];
  }
  if (other.has_input_grad) {
    if (has_input_grad)
      input_grad += other.input_grad;
    else {
      input_grad = other.input_grad;
      has_input_grad = true;
    }
  }
}

void GradientBundle::scale(double s) {
  value *= s;
  for (auto& w : weight_grads) w *= s;
  for (auto& b : bias_grads) b *= s;
  if (has_input_grad) input_grad *= s;
}

double GradientBundle::squared_norm() const {
  double n = 0.0;
  for (const auto& w : weight_grads) n += w.squaredNorm();
  for (const auto& b : bias_grads) n += b.squaredNorm();
  return n;
}

bool GradientBundle::all_finite() const {
  for (const auto& w : weight_grads)
    if (!w.allFinite()) return false;
  for (const auto& b : bias_grads)
    if (!b.allFinite()) return false;
  return std::isfinite(value);
}

MatrixXd apply_activation(Activation act, const MatrixXd& pre) {
  switch (act) {
    case Activation::None:
      return pre;
    case Activation::ReLU:
      return pre.cwiseMax(0.0);
    case Activation::Sigmoid: {
      MatrixXd out(pre.rows(), pre.cols());
      for (Eigen::Index i = 0; i < pre.size(); ++i) out(i) = logistic(pre(i));
      return out;
    }
  }
  throw std::logic_error("unknown activation");
}

MatrixXd activation_derivative(Activation act, const MatrixXd& pre, const MatrixXd& post) {
  switch (act) {
    case Activation::None:
      return MatrixXd::Ones(pre.rows(), pre.cols());
    case Activation::ReLU:
      return (pre.array() > 0.0).cast<double>();
    case Activation::Sigmoid:
      return (post.array() * (1.0 - post.array())).matrix();
  }
  throw std::logic_error("unknown activation");
}

DenseNetwork::DenseNetwork(int input_dim, std::vector<LayerSpec> specs, int skip_layer)
    : input_dim_(input_dim), skip_layer_(skip_layer) {
  if (input_dim < 1) throw std::invalid_argument("DenseNetwork: input dim must be >= 1");
  if (specs.empty()) throw std::invalid_argument("DenseNetwork: need at least one layer");
  if (skip_layer == 0 || skip_layer >= static_cast<int>(specs.size()))
    throw std::invalid_argument("DenseNetwork: skip layer out of range");
  int in = input_dim;
  for (int k = 0; k < static_cast<int>(specs.size()); ++k) {
    if (specs[k].out < 1) throw std::invalid_argument("DenseNetwork: layer width must be >= 1");
    const int cols = (k == skip_layer_) ? in + input_dim_ : in;
    Layer layer;
    layer.w = MatrixXd::Zero(specs[k].out, cols);
    layer.b = VectorXd::Zero(specs[k].out);
    layer.act = specs[k].act;
    layers_.push_back(std::move(layer));
    in = specs[k].out;
  }
}

int DenseNetwork::layer_input_dim(int k) const { return static_cast<int>(layers_[k].w.cols()); }

std::size_t DenseNetwork::parameter_count() const {
  std::size_t n = 0;
  for (const auto& l : layers_) n += static_cast<std::size_t>(l.w.size()) + l.b.size();
  return n;
}

MatrixXd DenseNetwork::forward_batch(const MatrixXd& x, Trace* trace) const {
  if (x.rows() != input_dim_) throw std::invalid_argument("DenseNetwork: input dim mismatch");
  if (trace) {
    trace->inputs.assign(layers_.size(), {});
    trace->pre.assign(layers_.size(), {});
    trace->post.assign(layers_.size(), {});
    trace->x = x;
  }
  MatrixXd z = x;
  for (int k = 0; k < static_cast<int>(layers_.size()); ++k) {
    MatrixXd in;
    if (k == skip_layer_) {
      in.resize(z.rows() + input_dim_, z.cols());
      in.topRows(z.rows()) = z;
      in.bottomRows(input_dim_) = x;
      in *= kSkipScale;
    } else {
      in = z;
    }
    MatrixXd pre = (layers_[k].w * in).colwise() + layers_[k].b;
    MatrixXd post = apply_activation(layers_[k].act, pre);
    if (trace) {
      trace->inputs[k] = std::move(in);
      trace->pre[k] = pre;
      trace->post[k] = post;
    }
    z = std::move(post);
  }
  return z;
}

VectorXd DenseNetwork::forward(const VectorXd& input) const {
  return forward_batch(input).col(0);
}

GradientBundle DenseNetwork::make_bundle() const {
  GradientBundle g;
  g.weight_grads.reserve(layers_.size());
  g.bias_grads.reserve(layers_.size());
  for (const auto& l : layers_) {
    g.weight_grads.emplace_back(MatrixXd::Zero(l.w.rows(), l.w.cols()));
    g.bias_grads.emplace_back(VectorXd::Zero(l.b.size()));
  }
  return g;
}

void DenseNetwork::backward_batch(const Trace& trace, const MatrixXd& upstream,
                                  GradientBundle& accum, MatrixXd* input_grad) const {
  if (upstream.rows() != output_dim() || upstream.cols() != trace.x.cols())
    throw std::invalid_argument("DenseNetwork: upstream shape mismatch");
  MatrixXd g = upstream;  // dL/d(post activation of current layer)
  MatrixXd skip_input_grad;
  for (int k = static_cast<int>(layers_.size()) - 1; k >= 0; --k) {
    const MatrixXd p =
        g.cwiseProduct(activation_derivative(layers_[k].act, trace.pre[k], trace.post[k]));
    accum.weight_grads[k].noalias() += p * trace.inputs[k].transpose();
    accum.bias_grads[k] += p.rowwise().sum();
    if (k == 0 && !input_grad) break;  // skip the last transpose-multiply when unused
    MatrixXd gin = layers_[k].w.transpose() * p;
    if (k == skip_layer_) {
      gin *= kSkipScale;
      if (input_grad) {
        if (skip_input_grad.size() == 0)
          skip_input_grad = gin.bottomRows(input_dim_);
        else
          skip_input_grad += gin.bottomRows(input_dim_);
      }
      g = gin.topRows(gin.rows() - input_dim_);
    } else {
      g = std::move(gin);
    }
  }
  if (input_grad) {
    *input_grad = g;
    if (skip_input_grad.size() != 0) *input_grad += skip_input_grad;
  }
}

GradientBundle DenseNetwork::backward(const VectorXd& input, const VectorXd& upstream) const {
  Trace trace;
  const MatrixXd y = forward_batch(input, &trace);
  GradientBundle g = make_bundle();
  MatrixXd in_grad;
  backward_batch(trace, upstream, g, &in_grad);
  g.has_input_grad = true;
  g.input_grad = in_grad;
  g.value = (y.col(0).array() * upstream.array()).sum();
  return g;
}

MatrixXd DenseNetwork::input_gradient_batch(const Trace& trace, InputGradTrace* keep) const {
  if (output_dim() != 1)
    throw std::logic_error("input_gradient_batch: requires scalar output");
  const Eigen::Index n = trace.x.cols();
  if (keep) keep->p.assign(layers_.size(), {});
  MatrixXd g = MatrixXd::Ones(1, n);
  MatrixXd skip_grad;
  for (int k = static_cast<int>(layers_.size()) - 1; k >= 0; --k) {
    MatrixXd p = g.cwiseProduct(activation_derivative(layers_[k].act, trace.pre[k], trace.post[k]));
    MatrixXd gin = layers_[k].w.transpose() * p;
    if (keep) keep->p[k] = std::move(p);
    if (k == skip_layer_) {
      gin *= kSkipScale;
      if (skip_grad.size() == 0)
        skip_grad = gin.bottomRows(input_dim_);
      else
        skip_grad += gin.bottomRows(input_dim_);
      g = gin.topRows(gin.rows() - input_dim_);
    } else {
      g = std::move(gin);
    }
  }
  if (skip_grad.size() != 0) g += skip_grad;
  return g;
}

void DenseNetwork::input_gradient_param_backward(const Trace& trace, const InputGradTrace& ig,
                                                 const MatrixXd& rbar0,
                                                 GradientBundle& accum) const {
  // Differentiates L(g) w.r.t. the weights, where g is the input gradient
  // computed by input_gradient_batch and rbar0 = dL/dg. Activation masks are
  // treated as locally constant, which is exact for ReLU/None almost
  // everywhere; smooth activations would need the curvature term.
  for (const auto& l : layers_) {
    if (l.act == Activation::Sigmoid)
      throw std::logic_error("input_gradient_param_backward: ReLU/None activations only");
  }
  if (rbar0.rows() != input_dim_ || rbar0.cols() != trace.x.cols())
    throw std::invalid_argument("input_gradient_param_backward: rbar0 shape mismatch");

  MatrixXd r = rbar0;  // dL/d(gradient w.r.t. z_{k-1}), ascending through layers
  for (int k = 0; k < static_cast<int>(layers_.size()); ++k) {
    MatrixXd ri;  // dL/d(W_k^T p_k)
    if (k == skip_layer_) {
      ri.resize(r.rows() + input_dim_, r.cols());
      ri.topRows(r.rows()) = r;
      ri.bottomRows(input_dim_) = rbar0;
      ri *= kSkipScale;
    } else {
      ri = std::move(r);
    }
    accum.weight_grads[k].noalias() += ig.p[k] * ri.transpose();
    if (k + 1 < static_cast<int>(layers_.size())) {
      const MatrixXd mask =
          activation_derivative(layers_[k].act, trace.pre[k], trace.post[k]);
      r = (layers_[k].w * ri).cwiseProduct(mask);
    }
  }
}

}  // namespace sdfrecon
