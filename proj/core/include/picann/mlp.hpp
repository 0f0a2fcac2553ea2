#pragma once

#include <functional>
#include <vector>

#include "picann/problem.hpp"
#include "picann/random_field.hpp"

namespace picann {

struct MlpParams {
  int n;     // level
  int M;     // branching base
  double T;  // horizon
  double t;  // evaluation time, 0 <= t <= T
  int d;
};

using ScalarField = std::function<double(const std::vector<double>&)>;
using ScalarMap = std::function<double(double)>;

// Multilevel Picard estimate of the terminal-value solution at (t, x):
// terminal average of g over M^n shifted endpoints plus telescoped nonlinearity
// corrections across levels, all randomness drawn from the field at the index tree
// rooted at theta.
double mlp_estimate(const MlpParams& params, const std::vector<double>& x, const ScalarField& g,
                    const ScalarMap& f, RandomField& field, const MultiIndex& theta);

// Smallest n with [(1+LT) m_n^{-1/2} exp(m_n^{pexp/2}/n)]^n <= eps; m_rule defaults
// to m_k = k. Throws if no n <= 64 works.
int choose_level(double eps, double L, double T, double pexp,
                 const std::function<double(int)>& m_rule = {});

// Smallest integer >= eps^-2.
long long choose_grid(double eps);

struct Schedule {
  int N = 0;
  long long K = 0;
  double delta = 0.0;
  double gamma = 0.0;
  double a_d = 0.0;
  double b_d = 0.0;
  double c_d = 0.0;       // sqrt(qq * q - 1)-type drift constant
  double cd_moment = 0.0; // moment-integral bound c_d (analytic route)
};

// Resolution schedule for accuracy eps: level count, time-grid size, and the
// gadget budgets delta, gamma from the closed-form constants.
Schedule compute_schedule(const ProblemSpec& spec, double eps);

}  // namespace picann
