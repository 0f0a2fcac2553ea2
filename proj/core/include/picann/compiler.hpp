#pragma once

#include <string>

#include "picann/calculus.hpp"
#include "picann/gadgets.hpp"
#include "picann/mlp.hpp"
#include "picann/random_field.hpp"

namespace picann {

struct CompiledFixedTime {
  Network net;           // input d, output 1
  std::string provenance;  // JSON: index, params, seed, activation, data-net ids
};

struct CompiledSpaceTime {
  Network net;  // input 1+d (time first), output 1
  int K;
  double gamma;
  std::string provenance;
};

// Translates the level-n estimator at fixed time t into one network: the terminal
// block averages G over the sampled endpoint shifts, the level blocks compose F
// with recursively compiled sub-estimators, and everything is merged by
// identity-padded sums. realize(net)(x) reproduces mlp_estimate with
// f = realize(F_0), g = realize(F_d) on the same field draws.
// F_d: input d, output 1 (terminal data); F_0: input 1, output 1 (nonlinearity).
CompiledFixedTime compile_fixed_time(const MlpParams& params, const MultiIndex& theta,
                                     const Network& F_d, const Network& F_0,
                                     const IdentityNet& j, const Activation& act,
                                     RandomField& field);

// Space-time network on the uniform grid t_k = kT/K with ghost knots +-T/K:
// realize(net)(t, x) = sum_k Gamma_gamma(H_k(t), U_{n, t_k}(x)), hats exact for
// relu/leaky and softplus-approximated at budget gamma otherwise. q is the
// envelope exponent of the product gadget (q > 2).
CompiledSpaceTime compile_space_time(const MlpParams& params, int K, double gamma, double q,
                                     const MultiIndex& theta, const Network& F_d,
                                     const Network& F_0, const IdentityNet& j,
                                     const Activation& act, RandomField& field);

// Clock change from the terminal-value convention to the initial-value one:
// out(s, x) = net(2 * diffusion * (T - s), x).
Network to_initial_value(const Network& net, double T, double diffusion, const IdentityNet& j);

}  // namespace picann
