#include <doctest.h>

#include <cmath>

#include "picann/network.hpp"
#include "picann/random_field.hpp"

using namespace picann;

namespace {

double unit(uint64_t h) { return (static_cast<double>(h >> 11) + 1.0) * 0x1p-53; }

Network abs_net() {
  std::vector<Layer> layers;
  layers.push_back(Layer{Matrix(2, 1, {1.0, -1.0}), {0.0, 0.0}});
  layers.push_back(Layer{Matrix(1, 2, {1.0, 1.0}), {0.0}});
  return Network(std::move(layers));
}

}  // namespace

TEST_CASE("single affine layer applies no activation") {
  const Network net = Network({Layer{Matrix(1, 1, {2.0}), {1.0}}});
  CHECK(realize(net, Activation::relu(), {-1.0})[0] == -1.0);
  CHECK(realize(net, Activation::softplus(), {-1.0})[0] == -1.0);
}

TEST_CASE("two-layer relu net computes |x|") {
  const Network net = abs_net();
  CHECK(realize(net, Activation::relu(), {-3.0})[0] == 3.0);
  CHECK(realize(net, Activation::relu(), {2.5})[0] == 2.5);
  CHECK(realize(net, Activation::relu(), {0.0})[0] == 0.0);
}

TEST_CASE("dims counts dense parameters") {
  const NetworkDims D = dims(abs_net());
  CHECK(D.widths == std::vector<int>{1, 2, 1});
  CHECK(D.param_count == 2 * 2 + 1 * 3);
  CHECK(D.depth == 2);
  CHECK(D.hidden_count == 1);
  CHECK(D.max_width == 2);
}

TEST_CASE("activation values") {
  CHECK(activate(Activation::relu(), -2.0) == 0.0);
  CHECK(activate(Activation::leaky(0.5), -2.0) == -1.0);
  CHECK(activate(Activation::softplus(), 0.0) == doctest::Approx(std::log(2.0)));
  CHECK(activate(Activation::softplus(), 1000.0) == 1000.0);
  CHECK(activate(Activation::softplus(), -1000.0) == 0.0);
  CHECK_THROWS(Activation::leaky(1.0));
  CHECK_THROWS(Activation::leaky(-1.0));
}

TEST_CASE("batched realization matches the scalar path") {
  std::vector<Layer> layers;
  layers.push_back(Layer{Matrix(3, 2, {0.3, -1.2, 0.7, 0.1, -0.4, 0.9}), {0.1, -0.2, 0.3}});
  layers.push_back(Layer{Matrix(2, 3, {1.0, -0.5, 0.2, 0.8, 0.3, -0.7}), {0.0, 0.5}});
  layers.push_back(Layer{Matrix(1, 2, {0.6, -1.1}), {-0.4}});
  const Network net(std::move(layers));
  for (const Activation& act :
       {Activation::relu(), Activation::leaky(0.3), Activation::softplus()}) {
    Matrix X(2, 7);
    for (size_t i = 0; i < X.a.size(); ++i) X.a[i] = 4.0 * unit(mix64(i + 17)) - 2.0;
    const Matrix Y = realize_batch(net, act, X);
    for (int c = 0; c < 7; ++c) {
      const double v = realize(net, act, {X(0, c), X(1, c)})[0];
      CHECK(Y(0, c) == doctest::Approx(v).epsilon(1e-12));
    }
  }
}

TEST_CASE("density counts structural zeros") {
  CHECK(density(abs_net()) == doctest::Approx(4.0 / 7.0));
}

TEST_CASE("constructor rejects incompatible layers") {
  std::vector<Layer> layers;
  layers.push_back(Layer{Matrix(2, 1, {1.0, 1.0}), {0.0, 0.0}});
  layers.push_back(Layer{Matrix(1, 3, {1.0, 1.0, 1.0}), {0.0}});
  CHECK_THROWS(Network(std::move(layers)));
  CHECK_THROWS(Network({}));
  CHECK_THROWS(Network({Layer{Matrix(2, 1, {1.0, 1.0}), {0.0}}}));
}
