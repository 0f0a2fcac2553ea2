#include "picann/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace picann {

double GadgetBudget::delta() const {
  return 0.5 * std::pow(4.0, -2.0 / (q - 2.0)) * std::pow(epsilon, q / (q - 2.0));
}

void validate(const HatSpec& spec) {
  if (!(spec.t0 < spec.t1 && spec.t1 < spec.t2))
    throw std::invalid_argument("hat knots must be strictly increasing");
}

void validate(const InterpSpec& spec) {
  if (spec.knots.size() != spec.values.size() || spec.knots.empty())
    throw std::invalid_argument("interp: knots/values length mismatch");
  for (size_t k = 1; k < spec.knots.size(); ++k)
    if (!(spec.knots[k - 1] < spec.knots[k]))
      throw std::invalid_argument("interp: knots must be strictly increasing");
}

double interp_eval(const InterpSpec& spec, double t) {
  validate(spec);
  if (t <= spec.knots.front()) return spec.values.front();
  if (t >= spec.knots.back()) return spec.values.back();
  const auto it = std::upper_bound(spec.knots.begin(), spec.knots.end(), t);
  const size_t k = static_cast<size_t>(it - spec.knots.begin());
  const double t0 = spec.knots[k - 1], t1 = spec.knots[k];
  const double f0 = spec.values[k - 1], f1 = spec.values[k];
  return f0 + (t - t0) / (t1 - t0) * (f1 - f0);
}

std::vector<std::pair<double, HatSpec>> hat_decompose(const InterpSpec& spec, double T) {
  validate(spec);
  const size_t K = spec.knots.size() - 1;
  if (K < 1) throw std::invalid_argument("hat_decompose: need at least two knots");
  if (spec.knots.front() != 0.0 || spec.knots.back() != T)
    throw std::invalid_argument("hat_decompose: knots must start at 0 and end at T");
  std::vector<double> t = spec.knots;
  t.insert(t.begin(), spec.knots[0] - (spec.knots[1] - spec.knots[0]));
  t.push_back(spec.knots[K] + (spec.knots[K] - spec.knots[K - 1]));
  std::vector<std::pair<double, HatSpec>> out;
  for (size_t k = 0; k <= K; ++k)
    out.emplace_back(spec.values[k], HatSpec{t[k], t[k + 1], t[k + 2]});
  return out;
}

Network hat_exact_leaky(const HatSpec& spec, double alpha) {
  validate(spec);
  const ReluFromLeaky rc = relu_from_leaky_coeffs(alpha);
  const double c[3] = {spec.c0(), spec.c1(), spec.c2()};
  const double t[3] = {spec.t0, spec.t1, spec.t2};
  std::vector<Network> members;
  for (int j = 0; j < 3; ++j)
    members.push_back(scale(rc.prefactor * alpha * c[j],
                            compose(activation_net(1), affine(Matrix(1, 1, {rc.neg_scale}),
                                                              {-rc.neg_scale * t[j]}))));
  for (int j = 0; j < 3; ++j)
    members.push_back(scale(rc.prefactor * c[j],
                            compose(activation_net(1), affine(Matrix(1, 1, {rc.pos_scale}),
                                                              {-rc.pos_scale * t[j]}))));
  return sum_same(members);
}

namespace {

struct Hinge {
  double coef;
  double knot;
};

// bias0 + sum_k coef_k * hinge(t - knot_k), where hinge is relu (exactly or via the
// leaky combination) or its softplus surrogate (1/s) softplus(s z).
Network hinge_net(double bias0, const std::vector<Hinge>& hinges, const Activation& act,
                  double softplus_scale) {
  const int n = static_cast<int>(hinges.size());
  if (n == 0) {
    // constant; keep a depth-2 shape so sums with other gadget nets stay uniform
    std::vector<Layer> layers;
    layers.push_back(Layer{Matrix(1, 1, {0.0}), {0.0}});
    layers.push_back(Layer{Matrix(1, 1, {0.0}), {bias0}});
    return Network(std::move(layers));
  }
  std::vector<Layer> layers;
  if (act.kind == Act::ReLU) {
    Matrix W1(n, 1);
    std::vector<double> b1(static_cast<size_t>(n));
    Matrix W2(1, n);
    for (int k = 0; k < n; ++k) {
      W1(k, 0) = 1.0;
      b1[static_cast<size_t>(k)] = -hinges[static_cast<size_t>(k)].knot;
      W2(0, k) = hinges[static_cast<size_t>(k)].coef;
    }
    layers.push_back(Layer{std::move(W1), std::move(b1)});
    layers.push_back(Layer{std::move(W2), {bias0}});
  } else if (act.kind == Act::LeakyReLU) {
    const ReluFromLeaky rc = relu_from_leaky_coeffs(act.alpha);
    Matrix W1(2 * n, 1);
    std::vector<double> b1(static_cast<size_t>(2 * n));
    Matrix W2(1, 2 * n);
    for (int k = 0; k < n; ++k) {
      const Hinge& h = hinges[static_cast<size_t>(k)];
      W1(2 * k, 0) = rc.neg_scale;
      b1[static_cast<size_t>(2 * k)] = -rc.neg_scale * h.knot;
      W1(2 * k + 1, 0) = rc.pos_scale;
      b1[static_cast<size_t>(2 * k + 1)] = -rc.pos_scale * h.knot;
      W2(0, 2 * k) = h.coef * rc.prefactor * act.alpha;
      W2(0, 2 * k + 1) = h.coef * rc.prefactor;
    }
    layers.push_back(Layer{std::move(W1), std::move(b1)});
    layers.push_back(Layer{std::move(W2), {bias0}});
  } else if (act.kind == Act::Softplus) {
    const double s = softplus_scale;
    Matrix W1(n, 1);
    std::vector<double> b1(static_cast<size_t>(n));
    Matrix W2(1, n);
    for (int k = 0; k < n; ++k) {
      W1(k, 0) = s;
      b1[static_cast<size_t>(k)] = -s * hinges[static_cast<size_t>(k)].knot;
      W2(0, k) = hinges[static_cast<size_t>(k)].coef / s;
    }
    layers.push_back(Layer{std::move(W1), std::move(b1)});
    layers.push_back(Layer{std::move(W2), {bias0}});
  } else {
    throw std::invalid_argument("hinge_net: unsupported activation");
  }
  return Network(std::move(layers));
}

// Hinge decomposition of the interpolant with constant extension: slope 0 outside,
// the coefficient at knot k is the slope jump there.
std::vector<Hinge> interp_hinges(const InterpSpec& spec) {
  validate(spec);
  const size_t K = spec.knots.size() - 1;
  std::vector<Hinge> hinges;
  double prev_slope = 0.0;
  for (size_t k = 0; k <= K; ++k) {
    const double slope =
        (k == K) ? 0.0
                 : (spec.values[k + 1] - spec.values[k]) / (spec.knots[k + 1] - spec.knots[k]);
    hinges.push_back(Hinge{slope - prev_slope, spec.knots[k]});
    prev_slope = slope;
  }
  return hinges;
}

}  // namespace

Network pwl_exact(const InterpSpec& spec, const Activation& act) {
  if (act.kind != Act::ReLU && act.kind != Act::LeakyReLU)
    throw std::invalid_argument("pwl_exact: relu or leaky only");
  return hinge_net(spec.values.front(), interp_hinges(spec), act, 0.0);
}

Network pwl_softplus_approx(const InterpSpec& spec, double eps, double q) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("pwl_softplus_approx: eps not in (0,1]");
  if (!(q > 1.0)) throw std::invalid_argument("pwl_softplus_approx: q must exceed 1");
  const std::vector<Hinge> hinges = interp_hinges(spec);
  double total = 0.0;
  for (const Hinge& h : hinges) total += std::abs(h.coef);
  const double s = std::max(1.0, total * std::log(2.0) / eps);
  return hinge_net(spec.values.front(), hinges, Activation::softplus(), s);
}

Network hat_net(const HatSpec& spec, const Activation& act, double eps, double q) {
  switch (act.kind) {
    case Act::ReLU: return hat_exact_leaky(spec, 0.0);
    case Act::LeakyReLU: return hat_exact_leaky(spec, act.alpha);
    case Act::Softplus:
      return pwl_softplus_approx(InterpSpec{{spec.t0, spec.t1, spec.t2}, {0.0, 1.0, 0.0}}, eps, q);
    default: throw std::invalid_argument("hat_net: unsupported activation");
  }
}

namespace {

// Refinement count: interpolating x^2 on [0,1] at 2^m + 1 uniform points has sup
// error exactly 4^{-m}/4.
int square_levels(double delta) {
  int m = 0;
  double err = 0.25;
  while (err > delta && m < 64) {
    err *= 0.25;
    ++m;
  }
  if (err > delta) throw std::invalid_argument("square_base: delta too small");
  return m;
}

// Deep ReLU base: clamp to [0,1], iterate the tent map, accumulate the dyadic
// corrections in a nonnegative carry channel, add back the x > 1 overflow.
Network square_base_relu(int m) {
  if (m == 0) {
    std::vector<Layer> layers;
    layers.push_back(Layer{Matrix(1, 1, {1.0}), {0.0}});
    layers.push_back(Layer{Matrix(1, 1, {1.0}), {0.0}});
    return Network(std::move(layers));
  }
  std::vector<Layer> layers;
  layers.push_back(Layer{Matrix(2, 1, {1.0, 1.0}), {0.0, -1.0}});
  // channels (A, B, C, R) = (tent iterate, its half-shift, carry, overflow)
  layers.push_back(Layer{Matrix(4, 2,
                                {1.0, -1.0,
                                 1.0, -1.0,
                                 1.0, -1.0,
                                 0.0, 1.0}),
                         {0.0, -0.5, 0.0, 0.0}});
  for (int s = 1; s < m; ++s) {
    const double inv = std::pow(0.25, s);
    layers.push_back(Layer{Matrix(4, 4,
                                  {2.0, -4.0, 0.0, 0.0,
                                   2.0, -4.0, 0.0, 0.0,
                                   -2.0 * inv, 4.0 * inv, 1.0, 0.0,
                                   0.0, 0.0, 0.0, 1.0}),
                           {0.0, -0.5, 0.0, 0.0}});
  }
  const double inv = std::pow(0.25, m);
  layers.push_back(Layer{Matrix(1, 4, {-2.0 * inv, 4.0 * inv, 1.0, 1.0}), {0.0}});
  return Network(std::move(layers));
}

// Same construction under leaky activation; sign-indefinite hinges use the
// two-unit leaky combination, nonnegative channels pass through unchanged.
Network square_base_leaky(int m, double alpha) {
  if (alpha < 0.0 || alpha >= 1.0)
    throw std::invalid_argument("square_base: leaky slope must lie in [0,1)");
  if (m == 0) return relu_from_leaky(1, alpha);
  const ReluFromLeaky rc = relu_from_leaky_coeffs(alpha);
  const double P = rc.prefactor, Pa = rc.prefactor * alpha;
  const double ns = rc.neg_scale, ps = rc.pos_scale;
  std::vector<Layer> layers;
  layers.push_back(Layer{Matrix(4, 1, {ns, ps, ns, ps}), {0.0, 0.0, -ns, -ps}});
  // v reconstructs clamp(x) from the four leaky units
  const double v[4] = {Pa, P, -Pa, -P};
  {
    Matrix W(5, 4);
    std::vector<double> b(5, 0.0);
    for (int c = 0; c < 4; ++c) {
      W(0, c) = v[c];
      W(1, c) = ns * v[c];
      W(2, c) = ps * v[c];
      W(3, c) = v[c];
    }
    b[1] = -ns * 0.5;
    b[2] = -ps * 0.5;
    W(4, 2) = Pa;
    W(4, 3) = P;
    layers.push_back(Layer{std::move(W), std::move(b)});
  }
  // channels (A, B-, B+, C, R); next tent iterate is e = 2A - 4(Pa B- + P B+)
  const double e[5] = {2.0, -4.0 * Pa, -4.0 * P, 0.0, 0.0};
  for (int s = 1; s < m; ++s) {
    const double inv = std::pow(0.25, s);
    Matrix W(5, 5);
    std::vector<double> b(5, 0.0);
    for (int c = 0; c < 5; ++c) {
      W(0, c) = e[c];
      W(1, c) = ns * e[c];
      W(2, c) = ps * e[c];
      W(3, c) = -inv * e[c];
    }
    W(3, 3) += 1.0;
    W(4, 4) = 1.0;
    b[1] = -ns * 0.5;
    b[2] = -ps * 0.5;
    layers.push_back(Layer{std::move(W), std::move(b)});
  }
  const double inv = std::pow(0.25, m);
  Matrix Wo(1, 5);
  for (int c = 0; c < 5; ++c) Wo(0, c) = -inv * e[c];
  Wo(0, 3) += 1.0;
  Wo(0, 4) += 1.0;
  layers.push_back(Layer{std::move(Wo), {0.0}});
  return Network(std::move(layers));
}

// Shallow softplus base: piecewise-linear interpolation of x^2 on [0,1] with the
// correct exterior slopes, each hinge replaced by a scaled softplus.
Network square_base_softplus(double delta) {
  const int N = std::max(1, static_cast<int>(std::ceil(1.0 / std::sqrt(2.0 * delta))));
  const double h = 1.0 / N;
  std::vector<Hinge> hinges;
  double total = 0.0;
  double prev_slope = 0.0;
  for (int k = 0; k <= N; ++k) {
    const double slope = (k == N) ? 1.0 : (2.0 * k + 1.0) * h;
    hinges.push_back(Hinge{slope - prev_slope, k * h});
    total += std::abs(slope - prev_slope);
    prev_slope = slope;
  }
  const double s = 2.0 * total * std::log(2.0) / delta;
  return hinge_net(0.0, hinges, Activation::softplus(), s);
}

}  // namespace

SquareBase square_base(double delta, const Activation& act) {
  if (!(delta > 0.0)) throw std::invalid_argument("square_base: delta must be positive");
  Network net = [&] {
    switch (act.kind) {
      case Act::ReLU: return square_base_relu(square_levels(delta));
      case Act::LeakyReLU: return square_base_leaky(square_levels(delta), act.alpha);
      case Act::Softplus: return square_base_softplus(delta);
      default: throw std::invalid_argument("square_base: unsupported activation");
    }
  }();
  const double r = 0.5;
  const double c = static_cast<double>(dims(net).param_count) * std::pow(delta, r);
  return SquareBase{std::move(net), c, r};
}

Network square_net(const GadgetBudget& budget, const Activation& act) {
  if (!(budget.q > 2.0)) throw std::invalid_argument("square_net: q must exceed 2");
  if (!(budget.epsilon > 0.0 && budget.epsilon <= 1.0))
    throw std::invalid_argument("square_net: eps not in (0,1]");
  SquareBase base = square_base(budget.delta(), act);
  const double beta = std::pow(budget.epsilon / 4.0, 1.0 / (budget.q - 2.0));
  Network pair = parallel_same(std::vector<Network>{base.net, base.net});
  Network inner = compose(pair, affine(Matrix(2, 1, {beta, -beta}), {0.0, 0.0}));
  const double ib2 = 1.0 / (beta * beta);
  return compose(affine(Matrix(1, 2, {ib2, ib2}), {0.0}), inner);
}

Network product_net(const GadgetBudget& budget, const Activation& act) {
  if (!(budget.q > 2.0)) throw std::invalid_argument("product_net: q must exceed 2");
  const double eps_sq = budget.epsilon / (std::pow(2.0, budget.q - 1.0) + 1.0);
  Network sq = square_net(GadgetBudget{eps_sq, budget.q}, act);
  Network triple = parallel_same(std::vector<Network>{sq, sq, sq});
  Network inner = compose(triple, affine(Matrix(3, 2, {1.0, 1.0, 1.0, 0.0, 0.0, 1.0}),
                                         {0.0, 0.0, 0.0}));
  return compose(affine(Matrix(1, 3, {0.5, -0.5, -0.5}), {0.0}), inner);
}

}  // namespace picann
