#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "picann/network.hpp"

namespace picann {

struct CodRow {
  int d = 0;
  long long param_count = 0;
  double build_seconds = 0.0;
  double eval_seconds = 0.0;
  double l2_error = 0.0;
};

struct CodResult {
  std::vector<CodRow> rows;
  double slope = 0.0;  // log-log least squares of param_count vs d
};

// Parameter-scaling benchmark: for each dimension build the space-time network of
// the linear test problem (radial bump data, f(u) = u) at fixed (n, M, K, gamma),
// time the build and a batched evaluation, and estimate the L2 error against the
// Monte Carlo Feynman-Kac oracle.
CodResult cod_benchmark(const std::vector<int>& dim_list, int n, int M, int K, double gamma,
                        const Activation& act, uint64_t seed, int oracle_points = 200,
                        int oracle_samples = 20000);

std::string cod_csv(const CodResult& result);

// The exact piecewise-linear radial bump max{0, 1 - (1/d) sum |x_i|} as a network.
Network radial_bump_net(int d, const Activation& act);

}  // namespace picann
