#include <benchmark/benchmark.h>

#include "picann/compiler.hpp"
#include "picann/gadgets.hpp"

using namespace picann;

namespace {

const Activation kAct = Activation::leaky(0.5);

Network data_net(int d) {
  const InterpSpec spec{{-2.0, -1.0, 0.0, 1.0, 2.0}, {0.1, -0.3, 0.5, 0.2, -0.1}};
  Matrix row(1, d);
  for (double& v : row.a) v = 1.0 / static_cast<double>(d);
  return compose(pwl_exact(spec, kAct), affine(std::move(row), {0.0}));
}

void bm_compose(benchmark::State& state) {
  const Network g = data_net(4);
  const Network sq = square_net(GadgetBudget{0.1, 3.0}, kAct);
  for (auto _ : state) benchmark::DoNotOptimize(compose(sq, g));
}
BENCHMARK(bm_compose);

void bm_product_build(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(product_net(GadgetBudget{eps, 3.0}, kAct));
}
BENCHMARK(bm_product_build)->Arg(4)->Arg(16);

void bm_realize_batch(benchmark::State& state) {
  const Network pr = product_net(GadgetBudget{0.1, 3.0}, kAct);
  const int n = static_cast<int>(state.range(0));
  Matrix pts(2, n);
  for (size_t i = 0; i < pts.a.size(); ++i) pts.a[i] = 6.0 * (i % 97) / 97.0 - 3.0;
  for (auto _ : state) benchmark::DoNotOptimize(realize_batch(pr, kAct, pts));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(bm_realize_batch)->Arg(256)->Arg(4096);

void bm_compile_fixed(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const IdentityNet j = identity_net(kAct);
  const Network F_d = data_net(d);
  const Network F_0 = affine(Matrix(1, 1, {1.0}), {0.0});
  for (auto _ : state) {
    RandomField field(0, d, 1.0);
    benchmark::DoNotOptimize(compile_fixed_time(MlpParams{2, 2, 1.0, 0.0, d},
                                                MultiIndex::root(), F_d, F_0, j, kAct, field));
  }
}
BENCHMARK(bm_compile_fixed)->Arg(1)->Arg(8);

void bm_density(benchmark::State& state) {
  const IdentityNet j = identity_net(kAct);
  const Network F_d = data_net(4);
  const Network F_0 = affine(Matrix(1, 1, {1.0}), {0.0});
  RandomField field(0, 4, 1.0);
  const CompiledFixedTime c = compile_fixed_time(MlpParams{2, 2, 1.0, 0.0, 4},
                                                 MultiIndex::root(), F_d, F_0, j, kAct, field);
  for (auto _ : state) benchmark::DoNotOptimize(density(c.net));
}
BENCHMARK(bm_density);

}  // namespace

BENCHMARK_MAIN();
