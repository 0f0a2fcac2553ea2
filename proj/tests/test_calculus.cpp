#include <doctest.h>

#include <cmath>

#include "picann/calculus.hpp"

using namespace picann;

namespace {

const double kProbes[] = {-2.7, -1.0, -0.3, 0.0, 0.4, 1.0, 2.9};

Network abs_net() {
  std::vector<Layer> layers;
  layers.push_back(Layer{Matrix(2, 1, {1.0, -1.0}), {0.0, 0.0}});
  layers.push_back(Layer{Matrix(1, 2, {1.0, 1.0}), {0.0}});
  return Network(std::move(layers));
}

}  // namespace

TEST_CASE("identity nets are exact") {
  for (const Activation& act :
       {Activation::relu(), Activation::leaky(0.5), Activation::softplus()}) {
    const IdentityNet j = identity_net(act);
    CHECK(j.width == 2);
    for (double x : kProbes)
      CHECK(realize(j.net, act, {x})[0] == doctest::Approx(x).epsilon(1e-14));
  }
}

TEST_CASE("composition realizes the function composition") {
  const Network doubler = affine(Matrix(1, 1, {2.0}), {1.0});
  const Network comp = compose(doubler, abs_net());
  for (double x : kProbes)
    CHECK(realize(comp, Activation::relu(), {x})[0] == doctest::Approx(2.0 * std::abs(x) + 1.0));
  CHECK(comp.depth() == 2);
}

TEST_CASE("power composes repeatedly and n = 0 is the affine identity") {
  const Network doubler = affine(Matrix(1, 1, {2.0}), {0.0});
  CHECK(realize(power(doubler, 3), Activation::relu(), {1.5})[0] == 12.0);
  const Network id0 = power(abs_net(), 0);
  CHECK(id0.depth() == 1);
  CHECK(realize(id0, Activation::relu(), {-4.0})[0] == -4.0);
}

TEST_CASE("extension pads depth without changing the realization") {
  for (const Activation& act :
       {Activation::relu(), Activation::leaky(0.5), Activation::softplus()}) {
    const IdentityNet j = identity_net(act);
    const Network base = compose(affine(Matrix(1, 2, {1.0, -0.5}), {0.2}), activation_net(2));
    for (int L = base.depth(); L <= base.depth() + 3; ++L) {
      const Network ext = extend(base, L, j);
      CHECK(ext.depth() == L);
      for (double x : kProbes)
        CHECK(realize(ext, act, {x, -x})[0] ==
              doctest::Approx(realize(base, act, {x, -x})[0]).epsilon(1e-12));
    }
    CHECK_THROWS(extend(base, base.depth() - 1, j));
  }
}

TEST_CASE("activation_net applies the activation once componentwise") {
  const Network a = activation_net(2);
  const auto v = realize(a, Activation::leaky(0.5), {-2.0, 3.0});
  CHECK(v[0] == -1.0);
  CHECK(v[1] == 3.0);
}

TEST_CASE("parallel stacking is the tuple of member realizations") {
  const std::vector<Network> members{abs_net(), abs_net()};
  const Network par = parallel_same(members);
  const auto v = realize(par, Activation::relu(), {-2.0, 5.0});
  CHECK(v[0] == 2.0);
  CHECK(v[1] == 5.0);

  const IdentityNet j = identity_net(Activation::relu());
  const std::vector<Network> mixed{abs_net(), affine(Matrix(1, 1, {3.0}), {-1.0})};
  const Network pg = parallel_general(mixed, j);
  const auto w = realize(pg, Activation::relu(), {-2.0, 5.0});
  CHECK(w[0] == 2.0);
  CHECK(w[1] == 14.0);
}

TEST_CASE("scaling only touches the output layer") {
  const Network sc = scale(-2.0, abs_net());
  CHECK(sc.depth() == abs_net().depth());
  CHECK(realize(sc, Activation::relu(), {-3.0})[0] == -6.0);
}

TEST_CASE("depth-1 sums merge weights exactly") {
  const std::vector<Network> members{affine(Matrix(1, 2, {1.0, 2.0}), {3.0}),
                                     affine(Matrix(1, 2, {-4.0, 0.5}), {1.0})};
  const Network s = sum_same(members);
  CHECK(s.depth() == 1);
  CHECK(s.layer(0).w.a == std::vector<double>{-3.0, 2.5});
  CHECK(s.layer(0).b == std::vector<double>{4.0});
}

TEST_CASE("mixed-depth sums stack interior widths") {
  const IdentityNet j = identity_net(Activation::leaky(0.5));
  const std::vector<Network> members{abs_net(), affine(Matrix(1, 1, {3.0}), {-1.0})};
  const Network s = sum_diff(members, j);
  CHECK(s.depth() == 2);
  CHECK(dims(s).widths == std::vector<int>{1, 4, 1});
  // under a leaky activation the |x| layout realizes a(x) + a(-x) = |x| / 2
  for (double x : kProbes)
    CHECK(realize(s, Activation::leaky(0.5), {x})[0] ==
          doctest::Approx(0.5 * std::abs(x) + 3.0 * x - 1.0).epsilon(1e-14));
}

TEST_CASE("relu is recoverable from a leaky activation") {
  for (double alpha : {0.1, 0.5, 0.9}) {
    const Network r = relu_from_leaky(2, alpha);
    for (double x : kProbes) {
      const auto v = realize(r, Activation::leaky(alpha), {x, -x});
      CHECK(v[0] == doctest::Approx(std::max(x, 0.0)).epsilon(1e-14));
      CHECK(v[1] == doctest::Approx(std::max(-x, 0.0)).epsilon(1e-14));
    }
  }
}

TEST_CASE("time shift reclocks the first input") {
  const IdentityNet j = identity_net(Activation::leaky(0.5));
  const Network f = affine(Matrix(1, 2, {1.0, 1.0}), {0.0});  // f(t, x) = t + x
  const Network g = time_shift(f, 1.0, -2.0, j);
  for (double s : kProbes)
    CHECK(realize(g, Activation::leaky(0.5), {s, 0.25})[0] ==
          doctest::Approx(1.0 - 2.0 * s + 0.25).epsilon(1e-14));
}
