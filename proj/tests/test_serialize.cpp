#include <doctest.h>

#include "picann/random_field.hpp"
#include "picann/serialize.hpp"

using namespace picann;

namespace {

Network noisy_net() {
  std::vector<Layer> layers;
  Matrix W1(3, 2);
  for (size_t i = 0; i < W1.a.size(); ++i)
    W1.a[i] = (static_cast<double>(mix64(i + 1) >> 11) + 1.0) * 0x1p-53 * 2.0 - 1.0;
  Matrix W2(1, 3, {0.1 + 0x1p-40, -7.25, 3e-17});
  layers.push_back(Layer{std::move(W1), {1.0 / 3.0, -2.0 / 7.0, 0.0}});
  layers.push_back(Layer{std::move(W2), {1e300}});
  return Network(std::move(layers));
}

}  // namespace

TEST_CASE("network json round-trips bit-identically") {
  const Network net = noisy_net();
  const Activation act = Activation::leaky(0.5);
  const LoadedNetwork back = network_from_json(network_to_json(net, act));
  CHECK(back.act == act);
  REQUIRE(back.net.depth() == net.depth());
  for (int k = 0; k < net.depth(); ++k) {
    REQUIRE(back.net.layer(k).w.a.size() == net.layer(k).w.a.size());
    for (size_t i = 0; i < net.layer(k).w.a.size(); ++i)
      CHECK(back.net.layer(k).w.a[i] == net.layer(k).w.a[i]);
    for (size_t i = 0; i < net.layer(k).b.size(); ++i)
      CHECK(back.net.layer(k).b[i] == net.layer(k).b[i]);
  }
}

TEST_CASE("activation kinds round-trip") {
  const Network net = Network({Layer{Matrix(1, 1, {1.0}), {0.0}}});
  for (const Activation& act :
       {Activation::relu(), Activation::leaky(0.25), Activation::softplus()}) {
    const LoadedNetwork back = network_from_json(network_to_json(net, act));
    CHECK(back.act == act);
  }
}

TEST_CASE("unsupported version is rejected") {
  CHECK_THROWS(network_from_json(
      R"({"version":2,"activation":{"kind":"relu"},"layers":[{"rows":1,"cols":1,"w":[1.0],"b":[0.0]}]})"));
  CHECK_THROWS(network_from_json("not json at all"));
  CHECK_THROWS(load_network("/nonexistent/path/net.json"));
}
