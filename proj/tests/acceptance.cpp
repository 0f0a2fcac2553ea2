#include <chrono>
#include <cstdio>
#include <vector>

#include "picann/verify.hpp"

// One line per acceptance criterion, with the wall-time limit enforced.

int main() {
  using picann::GateResult;
  struct Entry {
    GateResult (*gate)();
    double limit_seconds;
  };
  const std::vector<Entry> entries = {
      {picann::gate_hat_exactness, 1.0},
      {picann::gate_calculus_algebra, 30.0},
      {picann::gate_product_gadget, 120.0},
      {picann::gate_fixed_time_agreement, 120.0},
      {picann::gate_space_time_bound, 60.0},
      {picann::gate_pde_linear, 300.0},
      {picann::gate_pde_lipschitz, 300.0},
      {picann::gate_parameter_scaling, 180.0},
      {picann::gate_brownian_moments, 30.0},
      {picann::gate_transform_identities, 10.0},
  };
  bool all = true;
  int idx = 0;
  for (const Entry& e : entries) {
    ++idx;
    const auto t0 = std::chrono::steady_clock::now();
    const GateResult r = e.gate();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= e.limit_seconds;
    const bool ok = r.pass && in_time;
    all = all && ok;
    std::printf("[%2d/10] %s %s (%.2fs, limit %.0fs): %s\n", idx, ok ? "PASS" : "FAIL",
                r.name.c_str(), secs, e.limit_seconds,
                in_time ? r.detail.c_str() : "exceeded the time limit");
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
