#pragma once

#include <span>
#include <vector>

#include "picann/network.hpp"

namespace picann {

// Shallow network with widths (1, width, 1) whose realization is the identity on R.
struct IdentityNet {
  Network net;
  int width;  // the hidden width (2 for all built-in activations)
};

// Depth-1 network x -> Wx + B (exact under every activation).
Network affine(Matrix W, std::vector<double> B);

// Composition: depth L(phi)+L(psi)-1, with the boundary layers fused into
// (W1_phi * WL_psi, W1_phi * BL_psi + B1_phi).
Network compose(const Network& phi, const Network& psi);

// n-fold composition; n = 0 gives the affine identity on the output dimension.
Network power(const Network& phi, int n);

// Widths (d, d, d); first layer is the raw activation, second passes it through,
// so the realization applies the activation once componentwise.
Network activation_net(int d);

// Pads phi with identity-net layers up to depth L without changing its realization.
// phi must have scalar output matching j.
Network extend(const Network& phi, int L, const IdentityNet& j);

// Block-diagonal stacking of equal-depth networks; realization is the tuple of
// member realizations on the concatenated input.
Network parallel_same(std::span<const Network> nets);

// Extend all members to the maximum depth with j, then stack.
Network parallel_general(std::span<const Network> nets, const IdentityNet& j);

// lambda * realization; only the output layer changes.
Network scale(double lambda, const Network& phi);

// Pointwise sum of equal-depth, equal-shape networks (shared input).
Network sum_same(std::span<const Network> nets);

// Pointwise sum of networks with possibly different depths; members are
// identity-extended to the maximum depth first. Scalar outputs only.
Network sum_diff(std::span<const Network> nets, const IdentityNet& j);

// Exact shallow identity representation per activation:
//   relu:      x = r(x) - r(-x)
//   leaky a:   x = (a(x) - a(-x)) / (1 + alpha)
//   softplus:  x = a(x) - a(-x)
IdentityNet identity_net(const Activation& act);

// Coefficients of the two-term combination expressing componentwise ReLU through
// the leaky activation with slope alpha:
//   r(x) = pref * [ alpha * a(neg_scale * x) + a(pos_scale * x) ]
struct ReluFromLeaky {
  double prefactor;
  double pos_scale;
  double neg_scale;
};
ReluFromLeaky relu_from_leaky_coeffs(double alpha);

// d-dimensional network realizing componentwise max{x,0} under leaky slope alpha.
Network relu_from_leaky(int d, double alpha);

// G with realize(G)(s, x) = realize(f)(T + c*s, x); f takes (1+d)-dim input, time first.
Network time_shift(const Network& f, double T, double c, const IdentityNet& j);

}  // namespace picann
