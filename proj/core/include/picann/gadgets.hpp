#pragma once

#include <utility>
#include <vector>

#include "picann/calculus.hpp"
#include "picann/network.hpp"

namespace picann {

// Knots of the hat bump L^{0,1,0}_{t0,t1,t2}: 0 outside [t0,t2], 1 at t1, linear between.
struct HatSpec {
  double t0, t1, t2;
  double c0() const { return 1.0 / (t1 - t0); }
  double c1() const { return -1.0 / (t2 - t1) - 1.0 / (t1 - t0); }
  double c2() const { return 1.0 / (t2 - t1); }
};

// Piecewise-linear interpolation data: strictly increasing knots with one value each.
// Constant extension outside [knots.front(), knots.back()].
struct InterpSpec {
  std::vector<double> knots;
  std::vector<double> values;
};

// Accuracy budget for the square/product gadgets; delta is the base-net budget
// delta = 2^-1 4^{-2/(q-2)} eps^{q/(q-2)}.
struct GadgetBudget {
  double epsilon;
  double q;
  double delta() const;
};

void validate(const HatSpec& spec);
void validate(const InterpSpec& spec);

double interp_eval(const InterpSpec& spec, double t);

// Writes the interpolant on [0, T] as sum_k values[k] * hat_k(t) where hat_k has
// knots (t_{k-1}, t_k, t_{k+1}) and the ghost knots extend the end gaps outward.
// Requires knots.front() = 0 and knots.back() = T.
std::vector<std::pair<double, HatSpec>> hat_decompose(const InterpSpec& spec, double T);

// Exact hat network, dims (1,6,1), 19 parameters; alpha = 0 gives the ReLU case.
Network hat_exact_leaky(const HatSpec& spec, double alpha);

// Exact network for a piecewise-linear interpolant with constant extension,
// for relu or leaky activations. Width: 1 or 2 units per knot.
Network pwl_exact(const InterpSpec& spec, const Activation& act);

// Softplus approximation of the interpolant: each hinge becomes the scaled unit
// z -> (1/s) softplus(s z), with s chosen so the total gap stays below eps.
// Error <= eps * max{1, |t|^q} for all t.
Network pwl_softplus_approx(const InterpSpec& spec, double eps, double q);

// Hat network for any supported activation; eps/q only matter on the softplus path.
Network hat_net(const HatSpec& spec, const Activation& act, double eps, double q);

// Base approximator G for the square: |G(x) - f(x)| <= delta with f(x) = x^2 on
// [0,1] and f(y) = max{y,0} outside. Reports the measured size fit
// param_count(net) = c * delta^{-r}.
struct SquareBase {
  Network net;
  double c;
  double r;
};
SquareBase square_base(double delta, const Activation& act);

// |realize(x) - x^2| <= eps * max{1, |x|^q}; two scaled base branches.
Network square_net(const GadgetBudget& budget, const Activation& act);

// |realize(v,w) - v*w| <= eps * max{1, |v|^q, |w|^q}; polarization of three squares.
Network product_net(const GadgetBudget& budget, const Activation& act);

}  // namespace picann
