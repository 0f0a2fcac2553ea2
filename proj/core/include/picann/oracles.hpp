#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "picann/matrix.hpp"
#include "picann/mlp.hpp"

namespace picann {

// Nodes/weights for integral over R of e^{-y^2} f(y) dy.
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Quadrature gauss_hermite(int n);

struct OracleValue {
  double value = 0.0;
  double standard_error = 0.0;  // 0 for quadrature
};

// Closed form for f(u) = c*u: u(t,x) = e^{c(T-t)} E[g(x + W_{T-t})], with W scaled
// by the diffusion (variance 2*diffusion*(T-t) per coordinate). Tensorized
// Gauss-Hermite for d <= 3, Monte Carlo with standard error above.
OracleValue oracle_linear(const ScalarField& g, int d, double c, double T, double t,
                          const std::vector<double>& x, double diffusion = 0.5,
                          int nodes = 64, int mc_samples = 1000000, uint64_t seed = 0);

// Crank-Nicolson reference for dt u + diffusion u_xx + f(u) = 0, d = 1, terminal
// data g, zero Dirichlet walls at +-R. Second order in h and tau; stepped backward
// from time T and stored on the full grid.
struct FdSolution {
  double T, R, h, tau;
  int nx, nt;
  std::vector<double> vals;  // (nt+1) x nx, row m = time m*tau after reversal start
  double at(double t, double x) const;
};
FdSolution oracle_fd_1d(const ScalarMap& f, const std::function<double(double)>& g, double T,
                        double R, double h, double tau, double diffusion = 0.5);

// Batched scalar field over column points.
using BatchField = std::function<std::vector<double>(const Matrix&)>;
BatchField batch_of(const std::function<double(const std::vector<double>&)>& f);

// Uniform product measure on [t_lo, t_hi] x [b1, b2]^d (omit the time factor by
// setting include_time = false; then points have d coordinates).
struct MeasureSpec {
  int d = 1;
  double b1 = 0.0, b2 = 1.0;
  bool include_time = false;
  double t_lo = 0.0, t_hi = 1.0;
};

struct ErrorEstimate {
  double value = 0.0;
  double standard_error = 0.0;  // jackknife SE of the L^q value
};

// Monte Carlo L^q(measure) distance between two fields with jackknife SE.
ErrorEstimate lq_error(const BatchField& a, const BatchField& b, const MeasureSpec& measure,
                       double qnorm, int n_samples, uint64_t seed = 0);

}  // namespace picann
