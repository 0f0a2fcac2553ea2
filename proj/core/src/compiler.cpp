#include "picann/compiler.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace picann {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Network shift_input(int d, const std::vector<double>& w) {
  return affine(Matrix::identity(d), w);
}

Network compile_level(int n, double t, const MultiIndex& theta, const Network& G,
                      const Network& F, const IdentityNet& j, RandomField& field, int M,
                      double T, int d) {
  if (n == 0) return affine(Matrix(1, d), {0.0});
  const long long Mn = ipow(M, n);
  std::vector<Network> terminal;
  terminal.reserve(static_cast<size_t>(Mn));
  for (long long k = 1; k <= Mn; ++k) {
    const MultiIndex th = theta.child(0, -k);
    const auto W = field.brownian_at(th, {T - t});
    terminal.push_back(scale(1.0 / static_cast<double>(Mn), compose(G, shift_input(d, W[0]))));
  }
  Network block1 = sum_same(terminal);

  std::vector<Network> pos_blocks, neg_blocks;
  for (int i = 0; i < n; ++i) {
    const long long Mni = ipow(M, n - i);
    std::vector<Network> pos, neg;
    for (long long k = 1; k <= Mni; ++k) {
      const MultiIndex th = theta.child(i, k);
      const double U = field.time_sample(th, t);
      const auto W = field.brownian_at(th, {U - t});
      Network sub = compile_level(i, U, th, G, F, j, field, M, T, d);
      pos.push_back(compose(F, compose(sub, shift_input(d, W[0]))));
      Network subm = compile_level(std::max(i - 1, 0), U, theta.child(-i, k), G, F, j, field,
                                   M, T, d);
      neg.push_back(compose(F, compose(subm, shift_input(d, W[0]))));
    }
    pos_blocks.push_back(scale((T - t) / static_cast<double>(Mni), sum_diff(pos, j)));
    const double lam = i > 0 ? (t - T) / static_cast<double>(Mni) : 0.0;
    neg_blocks.push_back(scale(lam, sum_diff(neg, j)));
  }
  std::vector<Network> blocks{std::move(block1), sum_diff(pos_blocks, j),
                              sum_diff(neg_blocks, j)};
  return sum_diff(blocks, j);
}

std::string provenance_json(const MultiIndex& theta, const MlpParams& params,
                            const Activation& act, RandomField& field, const Network& F_d,
                            const Network& F_0, int K, double gamma) {
  nlohmann::json p;
  p["theta"] = theta.path;
  p["n"] = params.n;
  p["M"] = params.M;
  p["T"] = params.T;
  p["d"] = params.d;
  p["seed"] = field.seed();
  p["activation"] = act.name();
  if (act.kind == Act::LeakyReLU) p["alpha"] = act.alpha;
  p["F_d_params"] = dims(F_d).param_count;
  p["F_0_params"] = dims(F_0).param_count;
  if (K >= 0) {
    p["K"] = K;
    p["gamma"] = gamma;
  } else {
    p["t"] = params.t;
  }
  return p.dump();
}

void check_data_nets(const MlpParams& params, const Network& F_d, const Network& F_0) {
  if (F_d.input_dim() != params.d || F_d.output_dim() != 1)
    throw std::invalid_argument("compile: terminal net must map R^d -> R");
  if (F_0.input_dim() != 1 || F_0.output_dim() != 1)
    throw std::invalid_argument("compile: nonlinearity net must map R -> R");
}

}  // namespace

CompiledFixedTime compile_fixed_time(const MlpParams& params, const MultiIndex& theta,
                                     const Network& F_d, const Network& F_0,
                                     const IdentityNet& j, const Activation& act,
                                     RandomField& field) {
  check_data_nets(params, F_d, F_0);
  if (params.t < 0.0 || params.t > params.T)
    throw std::invalid_argument("compile: t outside [0, T]");
  Network net = compile_level(params.n, params.t, theta, F_d, F_0, j, field, params.M,
                              params.T, params.d);
  return CompiledFixedTime{std::move(net),
                           provenance_json(theta, params, act, field, F_d, F_0, -1, 0.0)};
}

CompiledSpaceTime compile_space_time(const MlpParams& params, int K, double gamma, double q,
                                     const MultiIndex& theta, const Network& F_d,
                                     const Network& F_0, const IdentityNet& j,
                                     const Activation& act, RandomField& field) {
  check_data_nets(params, F_d, F_0);
  if (K < 1) throw std::invalid_argument("compile_space_time: K must be >= 1");
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::invalid_argument("compile_space_time: gamma not in (0,1]");
  const double T = params.T;
  const double h = T / K;
  Network gam = product_net(GadgetBudget{gamma, q}, act);
  std::vector<Network> members;
  for (int k = 0; k <= K; ++k) {
    const HatSpec hs{(k - 1) * h, k * h, (k + 1) * h};
    Network H = hat_net(hs, act, gamma, q);
    Network U = compile_level(params.n, k * h, theta, F_d, F_0, j, field, params.M, T,
                              params.d);
    members.push_back(compose(gam, parallel_general(std::vector<Network>{H, U}, j)));
  }
  Network net = sum_diff(members, j);
  return CompiledSpaceTime{std::move(net), K, gamma,
                           provenance_json(theta, params, act, field, F_d, F_0, K, gamma)};
}

Network to_initial_value(const Network& net, double T, double diffusion, const IdentityNet& j) {
  if (!(T > 0.0) || !(diffusion > 0.0))
    throw std::invalid_argument("to_initial_value: T and diffusion must be positive");
  Network scaled = time_shift(net, 0.0, 2.0 * diffusion, j);
  return time_shift(scaled, T, -1.0, j);
}

}  // namespace picann
