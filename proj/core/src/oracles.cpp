#include "picann/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace picann {

namespace {

double hermite(int n, double x) {
  double h0 = 1.0, h1 = 2.0 * x;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double to_unit(uint64_t h) { return (static_cast<double>(h >> 11) + 1.0) * 0x1p-53; }

double gauss_from(uint64_t base, uint64_t ctr) {
  const double u1 = to_unit(mix64(base ^ (2 * ctr)));
  const double u2 = to_unit(mix64(base ^ (2 * ctr + 1)));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

Quadrature gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: need n >= 1");
  // grow the root set degree by degree; interlacing brackets every new root
  std::vector<double> roots{0.0};
  for (int k = 1; k < n; ++k) {
    const int m = k + 1;
    const double B = std::sqrt(2.0 * m + 1.0) + 1.0;
    std::vector<double> brk{-B};
    brk.insert(brk.end(), roots.begin(), roots.end());
    brk.push_back(B);
    std::vector<double> next;
    for (size_t i = 0; i + 1 < brk.size(); ++i) {
      double a = brk[i], b = brk[i + 1];
      double fa = hermite(m, a);
      for (int it = 0; it < 120; ++it) {
        const double c = 0.5 * (a + b);
        const double fc = hermite(m, c);
        if ((fa < 0.0) == (fc < 0.0)) {
          a = c;
          fa = fc;
        } else {
          b = c;
        }
      }
      next.push_back(0.5 * (a + b));
    }
    roots = std::move(next);
  }
  Quadrature qd;
  qd.nodes = roots;
  const double base = (n - 1) * std::log(2.0) + std::lgamma(n + 1.0) +
                      0.5 * std::log(std::numbers::pi);
  for (double x : roots) {
    const double hv = hermite(n - 1, x);
    qd.weights.push_back(
        std::exp(base - std::log(static_cast<double>(n) * n) - 2.0 * std::log(std::abs(hv))));
  }
  return qd;
}

OracleValue oracle_linear(const ScalarField& g, int d, double c, double T, double t,
                          const std::vector<double>& x, double diffusion, int nodes,
                          int mc_samples, uint64_t seed) {
  if (static_cast<int>(x.size()) != d) throw std::invalid_argument("oracle_linear: bad x size");
  if (t < 0.0 || t > T) throw std::invalid_argument("oracle_linear: t outside [0, T]");
  const double var = 2.0 * diffusion * (T - t);
  const double growth = std::exp(c * (T - t));
  if (var == 0.0) return OracleValue{growth * g(x), 0.0};
  const double sc = std::sqrt(2.0 * var);
  if (d <= 3) {
    const Quadrature qd = gauss_hermite(nodes);
    const double norm = std::pow(std::numbers::pi, -0.5 * d);
    std::vector<double> y(x.size());
    double acc = 0.0;
    std::vector<int> idx(static_cast<size_t>(d), 0);
    while (true) {
      double w = 1.0;
      for (int c2 = 0; c2 < d; ++c2) {
        w *= qd.weights[static_cast<size_t>(idx[static_cast<size_t>(c2)])];
        y[static_cast<size_t>(c2)] =
            x[static_cast<size_t>(c2)] + sc * qd.nodes[static_cast<size_t>(idx[static_cast<size_t>(c2)])];
      }
      acc += w * g(y);
      int c2 = 0;
      while (c2 < d && ++idx[static_cast<size_t>(c2)] == nodes) {
        idx[static_cast<size_t>(c2)] = 0;
        ++c2;
      }
      if (c2 == d) break;
    }
    return OracleValue{growth * norm * acc, 0.0};
  }
  const uint64_t base = mix64(seed ^ 0x4f5241434c454d43ULL);
  double sum = 0.0, sumsq = 0.0;
  std::vector<double> y(x.size());
  const double sd = std::sqrt(var);
  for (int s = 0; s < mc_samples; ++s) {
    for (int c2 = 0; c2 < d; ++c2)
      y[static_cast<size_t>(c2)] = x[static_cast<size_t>(c2)] +
                                   sd * gauss_from(base, static_cast<uint64_t>(s) * d + c2);
    const double v = g(y);
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / mc_samples;
  const double varest = std::max(0.0, sumsq / mc_samples - mean * mean);
  return OracleValue{growth * mean, growth * std::sqrt(varest / mc_samples)};
}

double FdSolution::at(double t, double x) const {
  if (t < 0.0 || t > T) throw std::invalid_argument("fd: t outside [0, T]");
  const double s = (T - t) / tau;
  const int m0 = std::min(nt - 1, static_cast<int>(std::floor(s)));
  const double lt = s - m0;
  const double xi = (x + R) / h;
  if (xi <= 0.0 || xi >= nx - 1) return 0.0;
  const int i0 = std::min(nx - 2, static_cast<int>(std::floor(xi)));
  const double lx = xi - i0;
  auto v = [&](int m, int i) { return vals[static_cast<size_t>(m) * nx + i]; };
  const double a = v(m0, i0) * (1 - lx) + v(m0, i0 + 1) * lx;
  const double b = v(m0 + 1, i0) * (1 - lx) + v(m0 + 1, i0 + 1) * lx;
  return a * (1 - lt) + b * lt;
}

FdSolution oracle_fd_1d(const ScalarMap& f, const std::function<double(double)>& g, double T,
                        double R, double h, double tau, double diffusion) {
  if (!(h > 0.0 && tau > 0.0 && R > 0.0 && T > 0.0))
    throw std::invalid_argument("oracle_fd_1d: bad grid");
  if (tau > h) throw std::invalid_argument("oracle_fd_1d: need tau <= h");
  const int nx = static_cast<int>(std::round(2.0 * R / h)) + 1;
  const int nt = static_cast<int>(std::ceil(T / tau - 1e-12));
  const double dt = T / nt;
  FdSolution sol{T, R, h, dt, nx, nt, {}};
  sol.vals.assign(static_cast<size_t>(nt + 1) * nx, 0.0);
  std::vector<double> v(static_cast<size_t>(nx));
  for (int i = 0; i < nx; ++i) v[static_cast<size_t>(i)] = g(-R + i * h);
  v.front() = v.back() = 0.0;
  std::copy(v.begin(), v.end(), sol.vals.begin());

  const double mu = diffusion * dt / (2.0 * h * h);
  const int n = nx - 2;  // interior
  std::vector<double> rhs(static_cast<size_t>(n)), cp(static_cast<size_t>(n)),
      dp(static_cast<size_t>(n)), fw(static_cast<size_t>(nx)), vpred(static_cast<size_t>(nx));
  auto explicit_half = [&](const std::vector<double>& u, int i) {
    return u[static_cast<size_t>(i)] +
           mu * (u[static_cast<size_t>(i - 1)] - 2.0 * u[static_cast<size_t>(i)] +
                 u[static_cast<size_t>(i + 1)]);
  };
  auto thomas = [&](std::vector<double>& out) {
    // (1+2mu) diag, -mu off-diagonals
    cp[0] = -mu / (1.0 + 2.0 * mu);
    dp[0] = rhs[0] / (1.0 + 2.0 * mu);
    for (int i = 1; i < n; ++i) {
      const double m = 1.0 + 2.0 * mu + mu * cp[static_cast<size_t>(i - 1)];
      cp[static_cast<size_t>(i)] = -mu / m;
      dp[static_cast<size_t>(i)] = (rhs[static_cast<size_t>(i)] + mu * dp[static_cast<size_t>(i - 1)]) / m;
    }
    // interior index i lives at grid index i + 1
    out[static_cast<size_t>(n)] = dp[static_cast<size_t>(n - 1)];
    for (int i = n - 2; i >= 0; --i)
      out[static_cast<size_t>(i + 1)] =
          dp[static_cast<size_t>(i)] - cp[static_cast<size_t>(i)] * out[static_cast<size_t>(i + 2)];
    out[0] = 0.0;
    out[static_cast<size_t>(nx - 1)] = 0.0;
  };

  for (int m = 1; m <= nt; ++m) {
    for (int i = 0; i < nx; ++i) fw[static_cast<size_t>(i)] = f(v[static_cast<size_t>(i)]);
    for (int i = 1; i <= n; ++i)
      rhs[static_cast<size_t>(i - 1)] = explicit_half(v, i) + dt * fw[static_cast<size_t>(i)];
    thomas(vpred);
    for (int i = 1; i <= n; ++i)
      rhs[static_cast<size_t>(i - 1)] =
          explicit_half(v, i) +
          dt * 0.5 * (fw[static_cast<size_t>(i)] + f(vpred[static_cast<size_t>(i)]));
    thomas(v);
    for (double u : v)
      if (!std::isfinite(u) || std::abs(u) > 1e12)
        throw std::runtime_error("oracle_fd_1d: blowup detected");
    std::copy(v.begin(), v.end(), sol.vals.begin() + static_cast<size_t>(m) * nx);
  }
  return sol;
}

BatchField batch_of(const std::function<double(const std::vector<double>&)>& f) {
  return [f](const Matrix& pts) {
    std::vector<double> out(static_cast<size_t>(pts.cols));
    std::vector<double> x(static_cast<size_t>(pts.rows));
    for (int c = 0; c < pts.cols; ++c) {
      for (int r = 0; r < pts.rows; ++r) x[static_cast<size_t>(r)] = pts(r, c);
      out[static_cast<size_t>(c)] = f(x);
    }
    return out;
  };
}

ErrorEstimate lq_error(const BatchField& a, const BatchField& b, const MeasureSpec& measure,
                       double qnorm, int n_samples, uint64_t seed) {
  if (!(qnorm >= 1.0)) throw std::invalid_argument("lq_error: need q >= 1");
  if (n_samples < 2) throw std::invalid_argument("lq_error: need at least 2 samples");
  const int dim = measure.d + (measure.include_time ? 1 : 0);
  const uint64_t base = mix64(seed ^ 0x4c51455252303144ULL);
  std::vector<double> contrib(static_cast<size_t>(n_samples));
  const int chunk = 8192;
  for (int s0 = 0; s0 < n_samples; s0 += chunk) {
    const int nc = std::min(chunk, n_samples - s0);
    Matrix pts(dim, nc);
    for (int c = 0; c < nc; ++c) {
      const uint64_t sbase = mix64(base ^ static_cast<uint64_t>(s0 + c));
      int row = 0;
      if (measure.include_time) {
        const double u = to_unit(mix64(sbase ^ 0x7469ULL));
        pts(row++, c) = measure.t_lo + (measure.t_hi - measure.t_lo) * u;
      }
      for (int k = 0; k < measure.d; ++k) {
        const double u = to_unit(mix64(sbase ^ (0x100ULL + static_cast<uint64_t>(k))));
        pts(row++, c) = measure.b1 + (measure.b2 - measure.b1) * u;
      }
    }
    const std::vector<double> va = a(pts);
    const std::vector<double> vb = b(pts);
    for (int c = 0; c < nc; ++c)
      contrib[static_cast<size_t>(s0 + c)] =
          std::pow(std::abs(va[static_cast<size_t>(c)] - vb[static_cast<size_t>(c)]), qnorm);
  }
  double S = 0.0;
  for (double v : contrib) S += v;
  const double N = static_cast<double>(n_samples);
  const double est = std::pow(S / N, 1.0 / qnorm);
  // jackknife over left-one-out estimates
  double jsum = 0.0, jsumsq = 0.0;
  for (double v : contrib) {
    const double th = std::pow((S - v) / (N - 1.0), 1.0 / qnorm);
    jsum += th;
    jsumsq += th * th;
  }
  const double jm = jsum / N;
  const double jvar = std::max(0.0, jsumsq / N - jm * jm);
  return ErrorEstimate{est, std::sqrt((N - 1.0) * jvar)};
}

}  // namespace picann
