#include <benchmark/benchmark.h>

#include <cmath>

#include "landau/fuchsian.hpp"
#include "landau/gabor.hpp"
#include "landau/hyperbolic.hpp"
#include "landau/numerics.hpp"

using namespace landau;

static void BM_GaussHermiteRule(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_hermite(count));
}
BENCHMARK(BM_GaussHermiteRule)->Arg(32)->Arg(128)->Arg(512);

static void BM_GaussLaguerreRule(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_laguerre(count, 2.5));
}
BENCHMARK(BM_GaussLaguerreRule)->Arg(32)->Arg(128);

static void BM_FrameSection(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  const Lattice lattice = Lattice::square(std::sqrt(0.8));
  for (auto _ : state) benchmark::DoNotOptimize(frame_operator_section(0, lattice, modes, 14));
}
BENCHMARK(BM_FrameSection)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_Eigh(benchmark::State& state) {
  const HermitianMatrix m = frame_operator_section(1, Lattice::square(0.9), static_cast<int>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(eigh(m));
}
BENCHMARK(BM_Eigh)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_EvalForm(benchmark::State& state) {
  const QExpansion f = delta_cusp_form(24);
  const Complex z(0.31, 0.07);  // needs a few reduction steps
  for (auto _ : state) benchmark::DoNotOptimize(eval_form(f, z));
}
BENCHMARK(BM_EvalForm);

static void BM_TransformW(benchmark::State& state) {
  const HyperLevelSpec spec{5.0, 2};
  const TransformW W(spec, hyper_reference_state(spec), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(W({0.4, 1.3}));
}
BENCHMARK(BM_TransformW)->Arg(64)->Arg(128);

static void BM_Orbit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit(GroupChoice::modular(), {0.5, std::sqrt(3.0) / 2.0}, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Orbit)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
