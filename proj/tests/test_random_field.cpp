#include <doctest.h>

#include <cmath>

#include "picann/random_field.hpp"

using namespace picann;

TEST_CASE("paths start at zero and repeat deterministically") {
  RandomField a(7, 3, 1.0), b(7, 3, 1.0);
  const MultiIndex th = MultiIndex::root().child(1, 2);
  const auto z = a.brownian_at(th, {0.0});
  for (double v : z[0]) CHECK(v == 0.0);
  const auto va = a.brownian_at(th, {0.25, 0.5, 1.0});
  const auto vb = b.brownian_at(th, {0.25, 0.5, 1.0});
  const auto va2 = a.brownian_at(th, {0.25, 0.5, 1.0});
  REQUIRE(va.size() == 3);
  for (size_t i = 0; i < va.size(); ++i)
    for (int c = 0; c < 3; ++c) {
      CHECK(va[i][static_cast<size_t>(c)] == vb[i][static_cast<size_t>(c)]);
      CHECK(va[i][static_cast<size_t>(c)] == va2[i][static_cast<size_t>(c)]);
    }
}

TEST_CASE("different seeds and indices decorrelate") {
  RandomField a(1, 1, 1.0), b(2, 1, 1.0);
  const MultiIndex th = MultiIndex::root();
  CHECK(a.brownian_at(th, {1.0})[0][0] != b.brownian_at(th, {1.0})[0][0]);
  CHECK(a.brownian_at(th, {1.0})[0][0] != a.brownian_at(th.child(0, -1), {1.0})[0][0]);
}

TEST_CASE("terminal variance and increment independence look Brownian") {
  const int n = 4000;
  RandomField field(0, 1, 1.0);
  double s2 = 0.0, cross = 0.0, sh = 0.0, si = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto W = field.brownian_at(MultiIndex::root(i), {0.5, 1.0});
    const double half = W[0][0], inc = W[1][0] - W[0][0];
    s2 += W[1][0] * W[1][0];
    cross += half * inc;
    sh += half;
    si += inc;
  }
  CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.1));
  CHECK(std::abs(cross / n - (sh / n) * (si / n)) < 0.06);
}

TEST_CASE("bridge refinement preserves earlier anchors") {
  RandomField field(3, 2, 1.0);
  const MultiIndex th = MultiIndex::root();
  const double w_half = field.brownian_at(th, {0.5})[0][0];
  const auto refined = field.brownian_at(th, {0.25, 0.5, 0.75});
  CHECK(refined[1][0] == w_half);
}

TEST_CASE("time samples live in [t, T] and are index-deterministic") {
  RandomField field(0, 1, 2.0);
  for (int i = 0; i < 100; ++i) {
    const MultiIndex th = MultiIndex::root(i);
    const double u = field.time_sample(th, 0.5);
    CHECK(u >= 0.5);
    CHECK(u <= 2.0);
    CHECK(field.time_sample(th, 0.5) == u);
  }
}

TEST_CASE("mix64 is a fixed bijective hash") {
  CHECK(mix64(0) != 0);
  CHECK(mix64(1) != mix64(2));
  CHECK(mix64(42) == mix64(42));
}
