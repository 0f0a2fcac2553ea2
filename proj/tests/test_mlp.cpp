#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "picann/mlp.hpp"
#include "picann/oracles.hpp"

using namespace picann;

namespace {

const ScalarField kGauss = [](const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::exp(-s);
};

}  // namespace

TEST_CASE("level zero estimate is identically zero") {
  RandomField field(0, 2, 1.0);
  const double v = mlp_estimate(MlpParams{0, 3, 1.0, 0.3, 2}, {0.5, -1.0}, kGauss,
                                [](double u) { return u; }, field, MultiIndex::root());
  CHECK(v == 0.0);
}

TEST_CASE("level one with zero nonlinearity is the terminal average") {
  RandomField field(5, 1, 1.0);
  const MlpParams params{1, 2, 1.0, 0.25, 1};
  const double x = 0.4;
  const double est = mlp_estimate(params, {x}, kGauss, [](double) { return 0.0; }, field,
                                  MultiIndex::root());
  double want = 0.0;
  for (long long k = 1; k <= 2; ++k) {
    const auto W = field.brownian_at(MultiIndex::root().child(0, -k), {params.T - params.t});
    want += kGauss({x + W[0][0]});
  }
  want /= 2.0;
  CHECK(est == doctest::Approx(want).epsilon(1e-15));
}

TEST_CASE("linear problem estimate approaches the closed form") {
  const double oracle = oracle_linear(kGauss, 1, 1.0, 1.0, 0.0, {0.0}).value;
  std::vector<double> errs;
  for (uint64_t s = 0; s < 5; ++s) {
    RandomField field(s, 1, 1.0);
    const double est = mlp_estimate(MlpParams{3, 3, 1.0, 0.0, 1}, {0.0}, kGauss,
                                    [](double u) { return u; }, field, MultiIndex::root());
    errs.push_back(std::abs(est - oracle) / oracle);
  }
  std::sort(errs.begin(), errs.end());
  CHECK(errs[2] < 0.15);
}

TEST_CASE("argument validation") {
  RandomField field(0, 1, 1.0);
  const ScalarMap f = [](double u) { return u; };
  CHECK_THROWS(mlp_estimate(MlpParams{-1, 2, 1.0, 0.0, 1}, {0.0}, kGauss, f, field, MultiIndex::root()));
  CHECK_THROWS(mlp_estimate(MlpParams{1, 0, 1.0, 0.0, 1}, {0.0}, kGauss, f, field, MultiIndex::root()));
  CHECK_THROWS(mlp_estimate(MlpParams{1, 2, 1.0, 2.0, 1}, {0.0}, kGauss, f, field, MultiIndex::root()));
  CHECK_THROWS(mlp_estimate(MlpParams{1, 2, 1.0, 0.0, 2}, {0.0}, kGauss, f, field, MultiIndex::root()));
}

TEST_CASE("level selection matches frozen thresholds") {
  CHECK(choose_level(0.5, 1.0, 1.0, 2.0) == 31);
  CHECK(choose_level(0.5, 1.0, 1.0, 1.0) == 10);
  CHECK(choose_level(0.1, 1.0, 1.0, 2.0) == 34);
  CHECK_THROWS(choose_level(0.0, 1.0, 1.0, 2.0));
  // custom m-rule: constant m = 1 makes the bracket (1+LT) e, never <= eps
  CHECK_THROWS(choose_level(0.5, 1.0, 1.0, 2.0, [](int) { return 1.0; }));
}

TEST_CASE("grid size is the ceiling of eps^-2") {
  CHECK(choose_grid(0.5) == 4);
  CHECK(choose_grid(0.1) == 100);
  CHECK(choose_grid(1.0) == 1);
  CHECK(choose_grid(0.3) == 12);
}

TEST_CASE("schedule constants follow the closed forms at the unit problem") {
  ProblemSpec spec;  // d=1, T=1, L=1, kappa=1, p=1, q=3, qq=2, r=1
  const Schedule s = compute_schedule(spec, 0.5);
  CHECK(s.N == choose_level(0.5, 1.0, 1.0, 1.0));
  CHECK(s.K == 4);
  CHECK(s.a_d == doctest::Approx(std::exp(2.0) * 4.0 * 2.0 * 2.0 * 512.0));
  CHECK(s.b_d == doctest::Approx(2.0 * std::pow(2.0 * std::exp(1.0), 2.0)));
  CHECK(s.c_d == doctest::Approx(4.0 * std::exp(1.0) * std::sqrt(5.0)));
  CHECK(s.delta > 0.0);
  CHECK(s.delta < 0.5);
  CHECK(s.gamma > 0.0);
  CHECK(s.gamma < 0.5);
  CHECK(s.cd_moment > 1.0);
}
