#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "powctl/matrix.hpp"
#include "powctl/rng.hpp"

namespace powctl::nn {

// identity: raw affine output.
// bounded: lo + (hi - lo) * sigmoid(u), range-exact squash.
// two_headed: raw affine output of even width 2C, read as (mean | log std).
enum class OutputTransform : std::uint8_t { identity = 0, bounded = 1, two_headed = 2 };

struct ForwardCache {
  std::vector<Mat> layer_in;  // input to each affine layer; layer_in[0] is the net input
  Mat out;                    // transformed output
};

// Fully connected net with rectified-linear hidden layers. Parameters live in
// one flat vector laid out per layer as W (out x in, row-major) then b, which
// keeps the optimizer, soft updates and checkpoints shape-agnostic.
class DenseNet {
 public:
  DenseNet() = default;
  DenseNet(std::vector<int> dims, OutputTransform transform, double lo = 0.0, double hi = 0.0);

  const std::vector<int>& dims() const { return dims_; }
  OutputTransform transform() const { return transform_; }
  double out_lo() const { return lo_; }
  double out_hi() const { return hi_; }
  int input_dim() const { return dims_.front(); }
  int output_dim() const { return dims_.back(); }
  int layer_count() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t param_count() const { return params_.size(); }

  std::span<double> params() { return params_; }
  std::span<const double> params() const { return params_; }
  std::span<double> weight(int layer);
  std::span<const double> weight(int layer) const;
  std::span<double> bias(int layer);
  std::span<const double> bias(int layer) const;

  // uniform in +-1/sqrt(fan_in) per layer, biases included
  void init_params(RandomStream& rng);

  Mat forward(const Mat& x) const;
  Mat forward(const Mat& x, ForwardCache& cache) const;

  // dLdOut is the loss gradient w.r.t. the transformed output. Parameter
  // gradients (same flat layout) are written to grads; input gradients go to
  // dLdIn when non-null.
  void backward(const ForwardCache& cache, const Mat& dLdOut, std::span<double> grads,
                Mat* dLdIn = nullptr) const;

  void set_output_range(double lo, double hi);

  bool operator==(const DenseNet&) const = default;

 private:
  std::vector<int> dims_;
  OutputTransform transform_ = OutputTransform::identity;
  double lo_ = 0.0, hi_ = 0.0;
  std::vector<double> params_;
  std::vector<std::size_t> w_off_, b_off_;
};

// Bias-corrected adaptive moment estimation over a flat parameter vector.
struct AdamState {
  std::vector<double> m, v;
  long step = 0;
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  explicit AdamState(std::size_t n = 0, double learning_rate = 1e-3)
      : m(n, 0.0), v(n, 0.0), lr(learning_rate) {}
};

// Throws std::runtime_error on any non-finite gradient.
void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state);

// target <- tau * online + (1 - tau) * target, elementwise
void soft_update(std::span<double> target, std::span<const double> online, double tau);

struct GradCheckResult {
  double max_rel_err = 0.0;
  int params_checked = 0;
};

// Central finite differences over a random subsample of at least
// `sample_params` parameters against the analytic backward pass. `loss` maps
// the net output to a scalar, `dloss` to its gradient w.r.t. the output.
GradCheckResult gradient_check(const DenseNet& net, const Mat& input,
                               const std::function<double(const Mat&)>& loss,
                               const std::function<Mat(const Mat&)>& dloss, RandomStream& rng,
                               int sample_params = 200, double fd_step = 1e-5);

// Flat little-endian f64 parameter stream preceded by a JSON shape manifest.
void write_net(std::ostream& os, const DenseNet& net);
DenseNet read_net(std::istream& is);
void save_net(const DenseNet& net, const std::string& path);
DenseNet load_net(const std::string& path);

}  // namespace powctl::nn
