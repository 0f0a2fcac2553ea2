#include "picann/mlp.hpp"

#include <cmath>
#include <stdexcept>

namespace picann {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

double mlp_rec(int n, double t, const std::vector<double>& x, const ScalarField& g,
               const ScalarMap& f, RandomField& field, const MultiIndex& theta, int M,
               double T) {
  if (n == 0) return 0.0;
  const long long Mn = ipow(M, n);
  double val = 0.0;
  for (long long k = 1; k <= Mn; ++k) {
    const MultiIndex th = theta.child(0, -k);
    const auto W = field.brownian_at(th, {T - t});
    std::vector<double> y = x;
    for (size_t c = 0; c < y.size(); ++c) y[c] += W[0][c];
    val += g(y);
  }
  val /= static_cast<double>(Mn);
  for (int i = 0; i < n; ++i) {
    const long long Mni = ipow(M, n - i);
    double lacc = 0.0;
    for (long long k = 1; k <= Mni; ++k) {
      const MultiIndex th = theta.child(i, k);
      const double U = field.time_sample(th, t);
      const auto W = field.brownian_at(th, {U - t});
      std::vector<double> y = x;
      for (size_t c = 0; c < y.size(); ++c) y[c] += W[0][c];
      double a = f(mlp_rec(i, U, y, g, f, field, th, M, T));
      if (i > 0) a -= f(mlp_rec(i - 1, U, y, g, f, field, theta.child(-i, k), M, T));
      lacc += a;
    }
    val += (T - t) / static_cast<double>(Mni) * lacc;
  }
  if (std::abs(val) > 1e15) throw std::overflow_error("mlp_estimate: value exceeds 1e15");
  return val;
}

}  // namespace

double mlp_estimate(const MlpParams& params, const std::vector<double>& x, const ScalarField& g,
                    const ScalarMap& f, RandomField& field, const MultiIndex& theta) {
  if (params.n < 0 || params.M < 1) throw std::invalid_argument("mlp_estimate: need n >= 0, M >= 1");
  if (params.t < 0.0 || params.t > params.T)
    throw std::invalid_argument("mlp_estimate: t outside [0, T]");
  if (static_cast<int>(x.size()) != params.d)
    throw std::invalid_argument("mlp_estimate: x has wrong dimension");
  return mlp_rec(params.n, params.t, x, g, f, field, theta, params.M, params.T);
}

int choose_level(double eps, double L, double T, double pexp,
                 const std::function<double(int)>& m_rule) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("choose_level: eps not in (0,1]");
  const double log_eps = std::log(eps);
  for (int n = 1; n <= 64; ++n) {
    const double m = m_rule ? m_rule(n) : static_cast<double>(n);
    const double log_val =
        n * (std::log1p(L * T) - 0.5 * std::log(m) + std::pow(m, pexp / 2.0) / n);
    if (log_val <= log_eps) return n;
  }
  throw std::runtime_error("choose_level: no feasible level below cap 64");
}

long long choose_grid(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("choose_grid: eps must be positive");
  return static_cast<long long>(std::ceil(1.0 / (eps * eps)));
}

Schedule compute_schedule(const ProblemSpec& spec, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("compute_schedule: eps not in (0,1]");
  const double d = static_cast<double>(spec.d);
  const double T = spec.T, L = spec.L, kap = spec.kappa;
  const double p = spec.p, q = spec.q, qq = spec.qq, r = spec.r;

  Schedule s;
  s.N = choose_level(eps, L, T, p);
  s.K = choose_grid(eps);

  const double kdp = kap * std::pow(d, p);
  s.a_d = std::exp(2.0 * L * T) * (T + 1.0) * (T + 1.0) * (L + 1.0) * (kdp + 1.0) *
          std::pow(8.0, p + 2.0) * std::sqrt(d);
  s.b_d = std::pow(2.0, p - 1.0) * kdp * std::pow(std::exp(L * T) * (T + 1.0), p + 1.0) *
          (std::pow(kdp, p) + 1.0) * std::pow(3.0, p * p - 1.0);
  s.c_d = std::pow(2.0, p) * kdp * (T + 1.0) * std::exp(L * T) * std::sqrt(q * qq - 1.0);

  // moment-integral bound, computed in logs: the Brownian sup-moment exponent is 2 p^2 q qq
  const double E = 2.0 * p * p * q * qq;
  const double logA = E * (std::log1p(2.0 * T) + std::log(0.5 + E));
  const double log2pA = logA > std::log(2.0) ? logA + std::log1p(2.0 * std::exp(std::log(2.0) - logA))
                                             : std::log(2.0 + std::exp(logA));
  const double log_integral = std::log(kap) + log2pA + (r + 2.0) * E * std::log(std::max(d, 1.0));
  s.cd_moment = std::exp(log_integral / qq);

  s.delta = eps / (1.0 + 180.0 * (T + 1.0) * std::pow(2.0, p) * (s.a_d + s.b_d + s.c_d) *
                             s.cd_moment);
  const double Tq = std::pow(T + 1.0, q);
  s.gamma = eps / (2.0 * kap * std::pow(d, r * p * p * q) * static_cast<double>(s.K + 1) *
                   std::pow(1.0 + Tq, q) *
                   (1.0 + std::pow(3.0, 3.0 * p * p * q) * s.cd_moment *
                              (std::pow(s.c_d, q) +
                               Tq * (std::pow(s.a_d, q) + std::pow(s.b_d, q)) +
                               std::pow(kap, q) * std::pow(d, p * q))));
  return s;
}

}  // namespace picann
