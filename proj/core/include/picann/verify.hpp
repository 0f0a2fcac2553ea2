#pragma once

#include <string>
#include <vector>

namespace picann {

struct GateResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

GateResult gate_hat_exactness();
GateResult gate_calculus_algebra();
GateResult gate_product_gadget();
GateResult gate_fixed_time_agreement();
GateResult gate_space_time_bound();
GateResult gate_pde_linear();
GateResult gate_pde_lipschitz();
GateResult gate_parameter_scaling();
GateResult gate_brownian_moments();
GateResult gate_transform_identities();

// group: all | calculus | gadgets | compiler | pde
std::vector<GateResult> run_gates(const std::string& group);

}  // namespace picann
