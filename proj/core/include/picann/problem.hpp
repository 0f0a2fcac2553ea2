#pragma once

namespace picann {

// Constants of the semilinear heat problem and its error analysis:
// terminal-value form dt u + diffusion * Laplace u + f(u) = 0 on [0, T] x R^d.
// L bounds the Lipschitz constant of f; kappa, p, r bound the data growth and
// the measure moments; q > 2 and qq >= 2 are the gadget and error norms.
struct ProblemSpec {
  int d = 1;
  double T = 1.0;
  double diffusion = 0.5;
  double L = 1.0;
  double kappa = 1.0;
  double p = 1.0;
  double q = 3.0;
  double qq = 2.0;
  double r = 1.0;
};

}  // namespace picann
