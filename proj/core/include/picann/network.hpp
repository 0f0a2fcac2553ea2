#pragma once

#include <string>
#include <vector>

#include "picann/matrix.hpp"

namespace picann {

enum class Act { ReLU, LeakyReLU, Softplus, Identity };

// Activation choice; alpha is the leaky slope and is only meaningful for LeakyReLU.
// alpha must avoid {-1, 1}; the gadget constructions additionally assume alpha in (0,1),
// with alpha = 0 giving plain ReLU.
struct Activation {
  Act kind = Act::ReLU;
  double alpha = 0.0;

  static Activation relu() { return {Act::ReLU, 0.0}; }
  static Activation leaky(double a);
  static Activation softplus() { return {Act::Softplus, 0.0}; }
  static Activation identity() { return {Act::Identity, 0.0}; }

  // The leaky slope that reproduces this activation as x -> max{x, slope*x},
  // valid for ReLU (0) and LeakyReLU (alpha).
  double leaky_slope() const;

  bool operator==(const Activation& o) const { return kind == o.kind && alpha == o.alpha; }
  std::string name() const;
};

double activate(const Activation& act, double x);
std::vector<double> apply_activation(const Activation& act, const std::vector<double>& v);

struct Layer {
  Matrix w;
  std::vector<double> b;
};

// A layered sequence of (weight, bias) pairs. Immutable after construction;
// the constructor enforces dimension compatibility between adjacent layers.
class Network {
 public:
  explicit Network(std::vector<Layer> layers);

  const std::vector<Layer>& layers() const { return layers_; }
  const Layer& layer(int k) const { return layers_[static_cast<size_t>(k)]; }
  int depth() const { return static_cast<int>(layers_.size()); }
  int input_dim() const { return layers_.front().w.cols; }
  int output_dim() const { return layers_.back().w.rows; }
  // Width of layer k, k = 0..depth (k = 0 is the input).
  int width(int k) const;

 private:
  std::vector<Layer> layers_;
};

struct NetworkDims {
  std::vector<int> widths;   // (l_0, ..., l_L)
  int depth = 0;             // L
  int hidden_count = 0;      // L - 1
  long long param_count = 0; // sum_k l_k (l_{k-1} + 1)
  int input_dim = 0;
  int output_dim = 0;
  int max_width = 0;         // ||D(net)||
};

NetworkDims dims(const Network& net);

// Forward pass: affine-activation alternation, identity after the final layer.
std::vector<double> realize(const Network& net, const Activation& act,
                            const std::vector<double>& x);

// Batched forward pass over the columns of X (input_dim x n). Returns output_dim x n.
// Uses BLAS; bitwise output may differ from realize() in the last ulps only.
Matrix realize_batch(const Network& net, const Activation& act, const Matrix& X);

// Fraction of nonzero weight/bias entries; the constructions produce many structural zeros.
double density(const Network& net);

}  // namespace picann
