#include <doctest.h>

#include <cmath>

#include "picann/bench.hpp"

using namespace picann;

TEST_CASE("radial bump network is exact") {
  for (const Activation& act : {Activation::relu(), Activation::leaky(0.5)}) {
    for (int d : {1, 3}) {
      const Network net = radial_bump_net(d, act);
      for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> x(static_cast<size_t>(d));
        double s = 0.0;
        for (int k = 0; k < d; ++k) {
          x[static_cast<size_t>(k)] = std::sin(3.7 * rep + 1.3 * k) * 1.5;
          s += std::abs(x[static_cast<size_t>(k)]);
        }
        const double want = std::max(0.0, 1.0 - s / d);
        CHECK(realize(net, act, x)[0] == doctest::Approx(want).epsilon(1e-13));
      }
    }
  }
  CHECK_THROWS(radial_bump_net(2, Activation::softplus()));
}

TEST_CASE("benchmark rows are deterministic and parameter growth is tame") {
  const Activation act = Activation::leaky(0.5);
  const CodResult a = cod_benchmark({1, 2}, 1, 1, 2, 0.3, act, 0, 20, 500);
  const CodResult b = cod_benchmark({1, 2}, 1, 1, 2, 0.3, act, 0, 20, 500);
  REQUIRE(a.rows.size() == 2);
  CHECK(a.rows[0].param_count == b.rows[0].param_count);
  CHECK(a.rows[0].l2_error == b.rows[0].l2_error);
  CHECK(a.rows[1].l2_error == b.rows[1].l2_error);
  CHECK(a.slope == b.slope);
  // doubling the dimension multiplies the parameter count by at most 8.5
  CHECK(static_cast<double>(a.rows[1].param_count) <= 8.5 * a.rows[0].param_count);

  const std::string csv = cod_csv(a);
  CHECK(csv.rfind("d,param_count,build_seconds,eval_seconds,l2_error\n", 0) == 0);
  CHECK(csv.find("\n1,") != std::string::npos);
  CHECK(cod_csv(b).substr(0, 2) == csv.substr(0, 2));
}
