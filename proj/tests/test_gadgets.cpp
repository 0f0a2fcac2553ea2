#include <doctest.h>

#include <cmath>

#include "picann/gadgets.hpp"

using namespace picann;

TEST_CASE("hat slope coefficients") {
  const HatSpec spec{0.0, 0.5, 1.0};
  CHECK(spec.c0() == 2.0);
  CHECK(spec.c1() == -4.0);
  CHECK(spec.c2() == 2.0);
}

TEST_CASE("exact hat network has the promised shape and values") {
  const HatSpec spec{-0.25, 0.5, 2.0};
  for (double alpha : {0.0, 0.1, 0.5}) {
    const Network H = hat_exact_leaky(spec, alpha);
    const NetworkDims D = dims(H);
    CHECK(D.widths == std::vector<int>{1, 6, 1});
    CHECK(D.param_count == 19);
    const Activation act = alpha == 0.0 ? Activation::relu() : Activation::leaky(alpha);
    CHECK(realize(H, act, {0.5})[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(realize(H, act, {-0.25})[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(realize(H, act, {-1.0})[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(realize(H, act, {3.0})[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(realize(H, act, {0.125})[0] == doctest::Approx(0.5).epsilon(1e-14));
  }
}

TEST_CASE("hat decomposition reproduces the interpolant") {
  const InterpSpec spec{{0.0, 0.3, 0.7, 1.0}, {0.5, -1.0, 2.0, 0.25}};
  const auto terms = hat_decompose(spec, 1.0);
  REQUIRE(terms.size() == spec.knots.size());
  for (int i = 0; i <= 200; ++i) {
    const double t = i / 200.0;
    double acc = 0.0;
    for (const auto& [coef, hat] : terms) {
      double v = 0.0;
      if (t > hat.t0 && t < hat.t2)
        v = t <= hat.t1 ? (t - hat.t0) / (hat.t1 - hat.t0) : (hat.t2 - t) / (hat.t2 - hat.t1);
      acc += coef * v;
    }
    CHECK(acc == doctest::Approx(interp_eval(spec, t)).epsilon(1e-12));
  }
}

TEST_CASE("piecewise-linear networks are exact with constant extension") {
  const InterpSpec spec{{-1.0, 0.0, 0.5, 2.0}, {1.0, -0.5, 0.75, 0.25}};
  for (const Activation& act : {Activation::relu(), Activation::leaky(0.5)}) {
    const Network net = pwl_exact(spec, act);
    for (double t : {-3.0, -1.0, -0.2, 0.0, 0.3, 0.5, 1.7, 2.0, 4.5})
      CHECK(realize(net, act, {t})[0] == doctest::Approx(interp_eval(spec, t)).epsilon(1e-13));
  }
}

TEST_CASE("softplus interpolant respects its envelope budget") {
  const InterpSpec spec{{-1.0, 0.0, 0.5, 2.0}, {1.0, -0.5, 0.75, 0.25}};
  const double eps = 1e-3, q = 3.0;
  const Network net = pwl_softplus_approx(spec, eps, q);
  for (int i = 0; i <= 400; ++i) {
    const double t = -4.0 + 8.0 * i / 400.0;
    const double err = std::abs(realize(net, Activation::softplus(), {t})[0] - interp_eval(spec, t));
    CHECK(err <= eps * std::max(1.0, std::pow(std::abs(t), q)) * (1.0 + 1e-12));
  }
}

TEST_CASE("budget delta follows the closed form") {
  const GadgetBudget b{0.5, 3.0};
  CHECK(b.delta() == doctest::Approx(0.5 * std::pow(4.0, -2.0) * std::pow(0.5, 3.0)));
}

TEST_CASE("square base approximates x^2 inside and the ramp outside") {
  const double delta = 1e-3;
  for (const Activation& act :
       {Activation::relu(), Activation::leaky(0.5), Activation::softplus()}) {
    const SquareBase base = square_base(delta, act);
    for (int i = 0; i <= 200; ++i) {
      const double x = i / 200.0;
      CHECK(std::abs(realize(base.net, act, {x})[0] - x * x) <= delta * (1.0 + 1e-12));
    }
    for (double x : {-2.0, -0.5, 1.5, 3.0}) {
      const double want = x < 0.0 ? 0.0 : (x > 1.0 ? x : x * x);
      CHECK(std::abs(realize(base.net, act, {x})[0] - want) <= delta * (1.0 + 1e-12));
    }
    CHECK(base.c > 0.0);
    CHECK(base.r > 0.0);
  }
}

TEST_CASE("square gadget satisfies the polynomial envelope") {
  const GadgetBudget budget{0.25, 3.0};
  for (const Activation& act : {Activation::leaky(0.5), Activation::softplus()}) {
    const Network sq = square_net(budget, act);
    for (int i = 0; i <= 240; ++i) {
      const double x = -3.0 + 6.0 * i / 240.0;
      const double err = std::abs(realize(sq, act, {x})[0] - x * x);
      CHECK(err <= budget.epsilon * std::max(1.0, std::pow(std::abs(x), budget.q)));
    }
  }
}

TEST_CASE("product gadget satisfies the polynomial envelope on a coarse grid") {
  const GadgetBudget budget{0.25, 3.0};
  const Activation act = Activation::leaky(0.5);
  const Network pr = product_net(budget, act);
  for (int i = 0; i <= 40; ++i) {
    for (int k = 0; k <= 40; ++k) {
      const double v = -3.0 + 6.0 * i / 40.0;
      const double w = -3.0 + 6.0 * k / 40.0;
      const double env =
          std::max({1.0, std::pow(std::abs(v), budget.q), std::pow(std::abs(w), budget.q)});
      CHECK(std::abs(realize(pr, act, {v, w})[0] - v * w) <= budget.epsilon * env);
    }
  }
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS(validate(HatSpec{0.0, 0.0, 1.0}));
  CHECK_THROWS(validate(InterpSpec{{0.0, 0.0}, {1.0, 2.0}}));
  CHECK_THROWS(validate(InterpSpec{{0.0, 1.0}, {1.0}}));
  CHECK_THROWS(square_net(GadgetBudget{0.1, 2.0}, Activation::relu()));
}
