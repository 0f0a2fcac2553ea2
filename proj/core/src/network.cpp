#include "picann/network.hpp"

#include <cblas.h>

#include <cmath>
#include <stdexcept>

namespace picann {

Matrix matmul(const Matrix& A, const Matrix& B) {
  if (A.cols != B.rows) throw std::invalid_argument("matmul shape mismatch");
  Matrix C(A.rows, B.cols);
  if (A.rows == 0 || B.cols == 0 || A.cols == 0) return C;
  cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, A.rows, B.cols, A.cols, 1.0,
              A.a.data(), A.cols, B.a.data(), B.cols, 0.0, C.a.data(), C.cols);
  return C;
}

std::vector<double> affine_apply(const Matrix& A, const std::vector<double>& b,
                                 const std::vector<double>& x) {
  if (A.cols != static_cast<int>(x.size()) || A.rows != static_cast<int>(b.size()))
    throw std::invalid_argument("affine_apply shape mismatch");
  std::vector<double> y = b;
  for (int r = 0; r < A.rows; ++r) {
    double s = 0.0;
    const double* row = A.a.data() + static_cast<size_t>(r) * A.cols;
    for (int c = 0; c < A.cols; ++c) s += row[c] * x[static_cast<size_t>(c)];
    y[static_cast<size_t>(r)] += s;
  }
  return y;
}

void place_block(Matrix& dst, const Matrix& src, int r0, int c0) {
  if (r0 + src.rows > dst.rows || c0 + src.cols > dst.cols)
    throw std::invalid_argument("place_block out of range");
  for (int r = 0; r < src.rows; ++r)
    for (int c = 0; c < src.cols; ++c) dst(r0 + r, c0 + c) = src(r, c);
}

Activation Activation::leaky(double a) {
  if (a == 1.0 || a == -1.0) throw std::invalid_argument("leaky slope must avoid {-1, 1}");
  return {Act::LeakyReLU, a};
}

double Activation::leaky_slope() const {
  switch (kind) {
    case Act::ReLU: return 0.0;
    case Act::LeakyReLU: return alpha;
    default: throw std::logic_error("activation has no leaky slope");
  }
}

std::string Activation::name() const {
  switch (kind) {
    case Act::ReLU: return "relu";
    case Act::LeakyReLU: return "leaky_relu";
    case Act::Softplus: return "softplus";
    case Act::Identity: return "identity";
  }
  return "?";
}

double activate(const Activation& act, double x) {
  switch (act.kind) {
    case Act::ReLU: return x > 0.0 ? x : 0.0;
    case Act::LeakyReLU: return std::max(x, act.alpha * x);
    case Act::Softplus: {
      // stable branch form: ln(1+e^x) = max(x,0) + ln(1+e^-|x|);
      // past |x| = 40 the correction is below one ulp of the result
      const double ax = std::abs(x);
      if (ax > 40.0) return x > 0.0 ? x : 0.0;
      return (x > 0.0 ? x : 0.0) + std::log1p(std::exp(-ax));
    }
    case Act::Identity: return x;
  }
  return x;
}

std::vector<double> apply_activation(const Activation& act, const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = activate(act, v[i]);
  return out;
}

Network::Network(std::vector<Layer> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw std::invalid_argument("network needs at least one layer");
  for (size_t k = 0; k < layers_.size(); ++k) {
    const Layer& l = layers_[k];
    if (l.w.rows < 1 || l.w.cols < 1) throw std::invalid_argument("layer widths must be >= 1");
    if (l.w.rows != static_cast<int>(l.b.size()))
      throw std::invalid_argument("bias length must equal weight row count");
    if (k > 0 && l.w.cols != layers_[k - 1].w.rows)
      throw std::invalid_argument("adjacent layers are dimension-incompatible");
  }
}

int Network::width(int k) const {
  if (k == 0) return input_dim();
  return layers_[static_cast<size_t>(k - 1)].w.rows;
}

NetworkDims dims(const Network& net) {
  NetworkDims d;
  d.depth = net.depth();
  d.hidden_count = d.depth - 1;
  d.input_dim = net.input_dim();
  d.output_dim = net.output_dim();
  d.widths.push_back(net.input_dim());
  for (const Layer& l : net.layers()) d.widths.push_back(l.w.rows);
  for (size_t k = 1; k < d.widths.size(); ++k)
    d.param_count += static_cast<long long>(d.widths[k]) * (d.widths[k - 1] + 1);
  for (int w : d.widths) d.max_width = std::max(d.max_width, w);
  return d;
}

std::vector<double> realize(const Network& net, const Activation& act,
                            const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != net.input_dim())
    throw std::invalid_argument("realize: input has wrong dimension");
  std::vector<double> v = x;
  const int L = net.depth();
  for (int k = 0; k < L; ++k) {
    v = affine_apply(net.layer(k).w, net.layer(k).b, v);
    if (k + 1 < L)
      for (double& u : v) u = activate(act, u);
  }
  return v;
}

Matrix realize_batch(const Network& net, const Activation& act, const Matrix& X) {
  if (X.rows != net.input_dim())
    throw std::invalid_argument("realize_batch: input has wrong dimension");
  const int n = X.cols;
  Matrix V = X;
  const int L = net.depth();
  for (int k = 0; k < L; ++k) {
    const Layer& l = net.layer(k);
    Matrix Y(l.w.rows, n);
    for (int r = 0; r < l.w.rows; ++r)
      for (int c = 0; c < n; ++c) Y(r, c) = l.b[static_cast<size_t>(r)];
    cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, l.w.rows, n, l.w.cols, 1.0,
                l.w.a.data(), l.w.cols, V.a.data(), V.cols, 1.0, Y.a.data(), Y.cols);
    if (k + 1 < L)
      for (double& u : Y.a) u = activate(act, u);
    V = std::move(Y);
  }
  return V;
}

double density(const Network& net) {
  size_t nz = 0, total = 0;
  for (const Layer& l : net.layers()) {
    nz += l.w.nonzeros();
    total += l.w.a.size() + l.b.size();
    for (double v : l.b)
      if (v != 0.0) ++nz;
  }
  return total == 0 ? 0.0 : static_cast<double>(nz) / static_cast<double>(total);
}

}  // namespace picann
