#include "picann/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace picann {

Network affine(Matrix W, std::vector<double> B) {
  if (W.rows != static_cast<int>(B.size()))
    throw std::invalid_argument("affine: rows(W) != length(B)");
  std::vector<Layer> layers;
  layers.push_back(Layer{std::move(W), std::move(B)});
  return Network(std::move(layers));
}

Network compose(const Network& phi, const Network& psi) {
  if (phi.input_dim() != psi.output_dim())
    throw std::invalid_argument("compose: input_dim(phi) != output_dim(psi)");
  std::vector<Layer> layers;
  const int Lpsi = psi.depth();
  for (int k = 0; k < Lpsi - 1; ++k) layers.push_back(psi.layer(k));
  // fused boundary layer
  const Layer& last = psi.layer(Lpsi - 1);
  const Layer& first = phi.layer(0);
  Layer mid;
  mid.w = matmul(first.w, last.w);
  mid.b = affine_apply(first.w, first.b, last.b);
  layers.push_back(std::move(mid));
  for (int k = 1; k < phi.depth(); ++k) layers.push_back(phi.layer(k));
  return Network(std::move(layers));
}

Network power(const Network& phi, int n) {
  if (phi.input_dim() != phi.output_dim())
    throw std::invalid_argument("power: network is not square");
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  if (n == 0)
    return affine(Matrix::identity(phi.output_dim()), std::vector<double>(phi.output_dim(), 0.0));
  Network out = phi;
  for (int i = 1; i < n; ++i) out = compose(phi, out);
  return out;
}

Network activation_net(int d) {
  std::vector<Layer> layers;
  layers.push_back(Layer{Matrix::identity(d), std::vector<double>(d, 0.0)});
  layers.push_back(Layer{Matrix::identity(d), std::vector<double>(d, 0.0)});
  return Network(std::move(layers));
}

Network extend(const Network& phi, int L, const IdentityNet& j) {
  if (L < phi.depth()) throw std::invalid_argument("extend: L below current depth");
  if (phi.output_dim() != 1)
    throw std::invalid_argument("extend: only scalar-output networks supported");
  if (L == phi.depth()) {
    // zero-power case: fusing with the affine identity leaves phi unchanged
    return compose(power(j.net, 0), phi);
  }
  const int steps = (L - phi.depth()) / (j.net.depth() - 1);
  if (steps * (j.net.depth() - 1) != L - phi.depth())
    throw std::invalid_argument("extend: identity depth does not divide the gap");
  return compose(power(j.net, steps), phi);
}

Network parallel_same(std::span<const Network> nets) {
  if (nets.empty()) throw std::invalid_argument("parallel_same: empty");
  const int L = nets[0].depth();
  for (const Network& n : nets)
    if (n.depth() != L) throw std::invalid_argument("parallel_same: unequal depths");
  std::vector<Layer> layers;
  for (int k = 0; k < L; ++k) {
    int rows = 0, cols = 0;
    for (const Network& n : nets) {
      rows += n.layer(k).w.rows;
      cols += n.layer(k).w.cols;
    }
    Layer l{Matrix(rows, cols), {}};
    l.b.reserve(static_cast<size_t>(rows));
    int r0 = 0, c0 = 0;
    for (const Network& n : nets) {
      place_block(l.w, n.layer(k).w, r0, c0);
      l.b.insert(l.b.end(), n.layer(k).b.begin(), n.layer(k).b.end());
      r0 += n.layer(k).w.rows;
      c0 += n.layer(k).w.cols;
    }
    layers.push_back(std::move(l));
  }
  return Network(std::move(layers));
}

static int max_depth(std::span<const Network> nets) {
  int L = 1;
  for (const Network& n : nets) L = std::max(L, n.depth());
  return L;
}

Network parallel_general(std::span<const Network> nets, const IdentityNet& j) {
  const int L = max_depth(nets);
  std::vector<Network> padded;
  padded.reserve(nets.size());
  for (const Network& n : nets) padded.push_back(extend(n, L, j));
  return parallel_same(padded);
}

Network scale(double lambda, const Network& phi) {
  Matrix W = Matrix::identity(phi.output_dim());
  for (double& v : W.a) v *= lambda;
  return compose(affine(std::move(W), std::vector<double>(phi.output_dim(), 0.0)), phi);
}

Network sum_same(std::span<const Network> nets) {
  if (nets.empty()) throw std::invalid_argument("sum_same: empty");
  const int L = nets[0].depth();
  const int in = nets[0].input_dim();
  const int out = nets[0].output_dim();
  for (const Network& n : nets)
    if (n.depth() != L || n.input_dim() != in || n.output_dim() != out)
      throw std::invalid_argument("sum_same: shape mismatch");
  if (nets.size() == 1) return nets[0];
  if (L == 1) {
    Layer l{Matrix(out, in), std::vector<double>(static_cast<size_t>(out), 0.0)};
    for (const Network& n : nets) {
      for (size_t i = 0; i < l.w.a.size(); ++i) l.w.a[i] += n.layer(0).w.a[i];
      for (int r = 0; r < out; ++r) l.b[static_cast<size_t>(r)] += n.layer(0).b[static_cast<size_t>(r)];
    }
    std::vector<Layer> layers{std::move(l)};
    return Network(std::move(layers));
  }
  std::vector<Layer> layers;
  // first layer: members stacked over the shared input
  {
    int rows = 0;
    for (const Network& n : nets) rows += n.layer(0).w.rows;
    Layer l{Matrix(rows, in), {}};
    int r0 = 0;
    for (const Network& n : nets) {
      place_block(l.w, n.layer(0).w, r0, 0);
      l.b.insert(l.b.end(), n.layer(0).b.begin(), n.layer(0).b.end());
      r0 += n.layer(0).w.rows;
    }
    layers.push_back(std::move(l));
  }
  // middle layers: block diagonal
  for (int k = 1; k < L - 1; ++k) {
    int rows = 0, cols = 0;
    for (const Network& n : nets) {
      rows += n.layer(k).w.rows;
      cols += n.layer(k).w.cols;
    }
    Layer l{Matrix(rows, cols), {}};
    int r0 = 0, c0 = 0;
    for (const Network& n : nets) {
      place_block(l.w, n.layer(k).w, r0, c0);
      l.b.insert(l.b.end(), n.layer(k).b.begin(), n.layer(k).b.end());
      r0 += n.layer(k).w.rows;
      c0 += n.layer(k).w.cols;
    }
    layers.push_back(std::move(l));
  }
  // last layer: member outputs summed
  {
    int cols = 0;
    for (const Network& n : nets) cols += n.layer(L - 1).w.cols;
    Layer l{Matrix(out, cols), std::vector<double>(static_cast<size_t>(out), 0.0)};
    int c0 = 0;
    for (const Network& n : nets) {
      place_block(l.w, n.layer(L - 1).w, 0, c0);
      c0 += n.layer(L - 1).w.cols;
      for (int r = 0; r < out; ++r) l.b[static_cast<size_t>(r)] += n.layer(L - 1).b[static_cast<size_t>(r)];
    }
    layers.push_back(std::move(l));
  }
  return Network(std::move(layers));
}

Network sum_diff(std::span<const Network> nets, const IdentityNet& j) {
  if (nets.empty()) throw std::invalid_argument("sum_diff: empty");
  const int in = nets[0].input_dim();
  for (const Network& n : nets) {
    if (n.input_dim() != in) throw std::invalid_argument("sum_diff: input dims differ");
    if (n.output_dim() != 1) throw std::invalid_argument("sum_diff: scalar outputs only");
  }
  const int L = max_depth(nets);
  std::vector<Network> padded;
  padded.reserve(nets.size());
  for (const Network& n : nets) padded.push_back(extend(n, L, j));
  return sum_same(padded);
}

IdentityNet identity_net(const Activation& act) {
  double c = 1.0;
  switch (act.kind) {
    case Act::ReLU: c = 1.0; break;
    case Act::LeakyReLU: c = 1.0 / (1.0 + act.alpha); break;
    case Act::Softplus: c = 1.0; break;
    case Act::Identity: throw std::invalid_argument("identity_net: pick a nonlinear activation");
  }
  Matrix W1(2, 1, {1.0, -1.0});
  Matrix W2(1, 2, {c, -c});
  std::vector<Layer> layers;
  layers.push_back(Layer{std::move(W1), {0.0, 0.0}});
  layers.push_back(Layer{std::move(W2), {0.0}});
  return IdentityNet{Network(std::move(layers)), 2};
}

ReluFromLeaky relu_from_leaky_coeffs(double alpha) {
  if (alpha == 1.0 || alpha == -1.0)
    throw std::invalid_argument("relu_from_leaky: alpha must avoid {-1, 1}");
  const double s = std::abs(1.0 - alpha) / (1.0 - alpha);
  return ReluFromLeaky{
      std::abs(1.0 - alpha) / ((1.0 - alpha) * (1.0 - alpha * alpha)),
      s,
      -s,
  };
}

Network relu_from_leaky(int d, double alpha) {
  const ReluFromLeaky c = relu_from_leaky_coeffs(alpha);
  Matrix W1(2 * d, d);
  for (int i = 0; i < d; ++i) {
    W1(2 * i, i) = c.neg_scale;
    W1(2 * i + 1, i) = c.pos_scale;
  }
  Matrix W2(d, 2 * d);
  for (int i = 0; i < d; ++i) {
    W2(i, 2 * i) = c.prefactor * alpha;
    W2(i, 2 * i + 1) = c.prefactor;
  }
  std::vector<Layer> layers;
  layers.push_back(Layer{std::move(W1), std::vector<double>(static_cast<size_t>(2 * d), 0.0)});
  layers.push_back(Layer{std::move(W2), std::vector<double>(static_cast<size_t>(d), 0.0)});
  return Network(std::move(layers));
}

Network time_shift(const Network& f, double T, double c, const IdentityNet& j) {
  const int d = f.input_dim() - 1;
  if (d < 0) throw std::invalid_argument("time_shift: f needs (1+d)-dimensional input");
  std::vector<Network> members;
  members.push_back(affine(Matrix(1, 1, {c}), {T}));
  for (int i = 0; i < d; ++i) members.push_back(j.net);
  return compose(f, parallel_general(members, j));
}

}  // namespace picann
