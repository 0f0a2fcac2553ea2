#include "picann/bench.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "picann/compiler.hpp"

namespace picann {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double to_unit(uint64_t h) { return (static_cast<double>(h >> 11) + 1.0) * 0x1p-53; }

double gauss_from(uint64_t base, uint64_t ctr) {
  const double u1 = to_unit(mix64(base ^ (2 * ctr)));
  const double u2 = to_unit(mix64(base ^ (2 * ctr + 1)));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double bump(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += std::abs(v);
  return std::max(0.0, 1.0 - s / static_cast<double>(x.size()));
}

}  // namespace

Network radial_bump_net(int d, const Activation& act) {
  const double inv = 1.0 / static_cast<double>(d);
  if (act.kind == Act::ReLU) {
    Matrix W1(2 * d, d);
    for (int i = 0; i < d; ++i) {
      W1(2 * i, i) = 1.0;
      W1(2 * i + 1, i) = -1.0;
    }
    Matrix W2(1, 2 * d);
    for (int c = 0; c < 2 * d; ++c) W2(0, c) = -inv;
    std::vector<Layer> layers;
    layers.push_back(Layer{std::move(W1), std::vector<double>(static_cast<size_t>(2 * d), 0.0)});
    layers.push_back(Layer{std::move(W2), {1.0}});
    layers.push_back(Layer{Matrix(1, 1, {1.0}), {0.0}});
    return Network(std::move(layers));
  }
  if (act.kind != Act::LeakyReLU) throw std::invalid_argument("radial_bump_net: relu/leaky only");
  const ReluFromLeaky rc = relu_from_leaky_coeffs(act.alpha);
  const double P = rc.prefactor, Pa = rc.prefactor * act.alpha;
  Matrix W1(4 * d, d);
  for (int i = 0; i < d; ++i) {
    W1(4 * i, i) = rc.neg_scale;
    W1(4 * i + 1, i) = rc.pos_scale;
    W1(4 * i + 2, i) = -rc.neg_scale;
    W1(4 * i + 3, i) = -rc.pos_scale;
  }
  // z = 1 - (1/d) sum |x_i|, then the output hinge relu(z) as a leaky pair
  Matrix W2(2, 4 * d);
  for (int i = 0; i < 4 * d; i += 2) {
    W2(0, i) = rc.neg_scale * -inv * Pa;
    W2(0, i + 1) = rc.neg_scale * -inv * P;
    W2(1, i) = rc.pos_scale * -inv * Pa;
    W2(1, i + 1) = rc.pos_scale * -inv * P;
  }
  Matrix W3(1, 2, {Pa, P});
  std::vector<Layer> layers;
  layers.push_back(Layer{std::move(W1), std::vector<double>(static_cast<size_t>(4 * d), 0.0)});
  layers.push_back(Layer{std::move(W2), {rc.neg_scale, rc.pos_scale}});
  layers.push_back(Layer{std::move(W3), {0.0}});
  return Network(std::move(layers));
}

CodResult cod_benchmark(const std::vector<int>& dim_list, int n, int M, int K, double gamma,
                        const Activation& act, uint64_t seed, int oracle_points,
                        int oracle_samples) {
  CodResult result;
  const double T = 1.0, q = 3.0;
  const IdentityNet j = identity_net(act);
  for (int d : dim_list) {
    CodRow row;
    row.d = d;
    Network F_d = radial_bump_net(d, act);
    Network F_0 = affine(Matrix(1, 1, {1.0}), {0.0});
    RandomField field(seed, d, T);
    const auto t0 = std::chrono::steady_clock::now();
    CompiledSpaceTime st = compile_space_time(MlpParams{n, M, T, 0.0, d}, K, gamma, q,
                                              MultiIndex::root(), F_d, F_0, j, act, field);
    row.build_seconds = seconds_since(t0);
    row.param_count = dims(st.net).param_count;

    const uint64_t base = mix64(seed ^ 0xb36c4aULL);
    const int n_eval = 1000;
    Matrix pts(1 + d, n_eval);
    for (int c = 0; c < n_eval; ++c) {
      const uint64_t sb = mix64(base ^ static_cast<uint64_t>(c));
      pts(0, c) = T * to_unit(mix64(sb ^ 0x7469ULL));
      for (int k = 0; k < d; ++k)
        pts(k + 1, c) = to_unit(mix64(sb ^ (0x100ULL + static_cast<uint64_t>(k))));
    }
    const auto t1 = std::chrono::steady_clock::now();
    Matrix vals = realize_batch(st.net, act, pts);
    row.eval_seconds = seconds_since(t1);

    // L2 error over the first oracle_points columns against the Feynman-Kac MC value
    double acc = 0.0;
    const int np = std::min(oracle_points, n_eval);
    std::vector<double> y(static_cast<size_t>(d));
    for (int c = 0; c < np; ++c) {
      const double tt = pts(0, c);
      const double sd = std::sqrt(T - tt);
      const uint64_t ob = mix64(base ^ 0x0facceULL ^ static_cast<uint64_t>(c));
      double mean = 0.0;
      for (int s = 0; s < oracle_samples; ++s) {
        for (int k = 0; k < d; ++k)
          y[static_cast<size_t>(k)] =
              pts(k + 1, c) + sd * gauss_from(ob, static_cast<uint64_t>(s) * d + k);
        mean += bump(y);
      }
      const double u = std::exp(T - tt) * mean / oracle_samples;
      const double diff = vals(0, c) - u;
      acc += diff * diff;
    }
    row.l2_error = std::sqrt(acc / np);
    result.rows.push_back(row);
  }
  // least-squares slope of log(P) on log(d)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(result.rows.size());
  for (const CodRow& row : result.rows) {
    const double lx = std::log(static_cast<double>(row.d));
    const double ly = std::log(static_cast<double>(row.param_count));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  result.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return result;
}

std::string cod_csv(const CodResult& result) {
  std::ostringstream os;
  os.precision(17);
  os << "d,param_count,build_seconds,eval_seconds,l2_error\n";
  for (const CodRow& row : result.rows)
    os << row.d << "," << row.param_count << "," << row.build_seconds << ","
       << row.eval_seconds << "," << row.l2_error << "\n";
  return os.str();
}

}  // namespace picann
