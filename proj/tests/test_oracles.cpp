#include <doctest.h>

#include <cmath>
#include <numbers>

#include "picann/oracles.hpp"

using namespace picann;

namespace {

const ScalarField kGauss = [](const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::exp(-s);
};

}  // namespace

TEST_CASE("Gauss-Hermite nodes and weights, n = 5") {
  const Quadrature q = gauss_hermite(5);
  const double nodes[] = {-2.0201828704560856, -0.9585724646138185, 0.0, 0.9585724646138185,
                          2.0201828704560856};
  const double weights[] = {0.019953242059045913, 0.3936193231522412, 0.9453087204829419,
                            0.3936193231522412, 0.019953242059045913};
  for (int i = 0; i < 5; ++i) {
    CHECK(q.nodes[static_cast<size_t>(i)] == doctest::Approx(nodes[i]).epsilon(1e-12));
    CHECK(q.weights[static_cast<size_t>(i)] == doctest::Approx(weights[i]).epsilon(1e-12));
  }
  double total = 0.0;
  for (double w : gauss_hermite(8).weights) total += w;
  CHECK(total == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("linear oracle degenerate cases") {
  CHECK(oracle_linear(kGauss, 1, 0.0, 1.0, 1.0, {0.3}).value ==
        doctest::Approx(std::exp(-0.09)).epsilon(1e-15));
  const ScalarField one = [](const std::vector<double>&) { return 1.0; };
  CHECK(oracle_linear(one, 2, 1.0, 1.0, 0.25, {0.0, 0.0}).value ==
        doctest::Approx(std::exp(0.75)).epsilon(1e-12));
  const OracleValue mc = oracle_linear(one, 5, 1.0, 1.0, 0.0, {0.0, 0.0, 0.0, 0.0, 0.0});
  CHECK(mc.value == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(mc.standard_error == 0.0);
}

TEST_CASE("linear oracle golden value") {
  // d=1, c=1, g=exp(-x^2), T=1, t=0, x=0: e^1 E[g(W_1)] = e / sqrt(3)
  const double v = oracle_linear(kGauss, 1, 1.0, 1.0, 0.0, {0.0}).value;
  CHECK(v == doctest::Approx(1.5694007453940979).epsilon(1e-12));
  CHECK(v == doctest::Approx(std::exp(1.0) / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("finite differences match the heat kernel for f = 0") {
  const FdSolution fd = oracle_fd_1d([](double) { return 0.0; },
                                     [](double x) { return std::exp(-x * x); }, 1.0, 6.0, 0.01,
                                     0.01);
  // var of W_{T-t} is 2 * diffusion * (T - t) = 1; E g(W_1) = 1/sqrt(3)
  CHECK(std::abs(fd.at(0.0, 0.0) - 1.0 / std::sqrt(3.0)) < 1e-4);
}

TEST_CASE("finite differences cross-check the linear oracle") {
  const FdSolution fd = oracle_fd_1d([](double u) { return u; },
                                     [](double x) { return std::exp(-x * x); }, 1.0, 8.0, 0.02,
                                     0.02);
  double worst = 0.0;
  for (double t : {0.0, 0.25, 0.5, 0.75, 1.0})
    for (int i = -8; i <= 8; ++i) {
      const double x = i / 4.0;
      worst = std::max(worst,
                       std::abs(fd.at(t, x) - oracle_linear(kGauss, 1, 1.0, 1.0, t, {x}).value));
    }
  CHECK(worst < 1e-3);
}

TEST_CASE("finite differences self-converge at second order") {
  auto value = [](double h) {
    return oracle_fd_1d([](double u) { return std::sin(u); },
                        [](double x) { return std::exp(-x * x); }, 1.0, 6.0, h, h)
        .at(0.0, 0.0);
  };
  // steps that divide T exactly, so the time step is not rounded
  const double c1 = value(0.04), c2 = value(0.02), c3 = value(0.01);
  const double order = std::log2(std::abs(c1 - c2) / std::abs(c2 - c3));
  CHECK(order >= 1.7);
  CHECK(order <= 2.3);
}

TEST_CASE("fd grid validation") {
  CHECK_THROWS(oracle_fd_1d([](double) { return 0.0; }, [](double) { return 1.0; }, 1.0, 6.0,
                            0.01, 0.02));
  CHECK_THROWS(oracle_fd_1d([](double) { return 0.0; }, [](double) { return 1.0; }, 1.0, -1.0,
                            0.01, 0.01));
}

TEST_CASE("lq_error basics and monotonicity in q") {
  const BatchField zero = [](const Matrix& pts) {
    return std::vector<double>(static_cast<size_t>(pts.cols), 0.0);
  };
  const BatchField one = [](const Matrix& pts) {
    return std::vector<double>(static_cast<size_t>(pts.cols), 1.0);
  };
  const BatchField ramp = [](const Matrix& pts) {
    std::vector<double> out(static_cast<size_t>(pts.cols));
    for (int c = 0; c < pts.cols; ++c) out[static_cast<size_t>(c)] = pts(0, c);
    return out;
  };
  const MeasureSpec meas{1, 0.0, 1.0, false, 0.0, 1.0};
  CHECK(lq_error(one, one, meas, 2.0, 1000).value == 0.0);
  CHECK(lq_error(one, zero, meas, 2.0, 1000).value == doctest::Approx(1.0));
  CHECK(lq_error(one, zero, meas, 4.0, 1000).value == doctest::Approx(1.0));
  const double l2 = lq_error(ramp, zero, meas, 2.0, 20000).value;
  const double l4 = lq_error(ramp, zero, meas, 4.0, 20000).value;
  CHECK(l2 == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(0.02));
  CHECK(l4 >= l2);
  // repeated runs with one seed agree exactly
  CHECK(lq_error(ramp, zero, meas, 2.0, 5000, 7).value ==
        lq_error(ramp, zero, meas, 2.0, 5000, 7).value);
}
