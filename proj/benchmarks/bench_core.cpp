#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "optapprox/approximants.hpp"
#include "optapprox/gram.hpp"
#include "optapprox/series.hpp"
#include "optapprox/space.hpp"
#include "optapprox/zeros.hpp"

namespace {

using optapprox::Complex;

optapprox::SpaceModel dirichlet_space(double alpha) {
  return optapprox::SpaceModel(optapprox::WeightSequence::dirichlet(alpha));
}

optapprox::CoeffSeries one_minus_z() {
  return optapprox::CoeffSeries({Complex(1.0, 0.0), Complex(-1.0, 0.0)});
}

void BM_AssembleSolve(benchmark::State& state) {
  const auto space = dirichlet_space(1.0);
  const auto f = one_minus_z();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const auto sys = optapprox::assemble(space, f, n);
    benchmark::DoNotOptimize(optapprox::solve(sys));
  }
}
BENCHMARK(BM_AssembleSolve)->Arg(32)->Arg(128)->Arg(256);

void BM_ApproximantSweep(benchmark::State& state) {
  const auto space = dirichlet_space(0.0);
  const auto f = one_minus_z();
  const std::size_t n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(optapprox::approximant_sweep(space, f, n_max));
  }
}
BENCHMARK(BM_ApproximantSweep)->Arg(64)->Arg(256);

void BM_KernelValue(benchmark::State& state) {
  const auto space = dirichlet_space(-1.0);
  const Complex lambda(0.6, 0.2);
  const Complex z(0.5, -0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(space.kernel_value(lambda, z));
  }
}
BENCHMARK(BM_KernelValue);

void BM_FindRoots(benchmark::State& state) {
  const std::size_t degree = static_cast<std::size_t>(state.range(0));
  std::vector<Complex> coeffs(degree + 1);
  for (std::size_t k = 0; k <= degree; ++k) {
    coeffs[k] = Complex(1.0 + static_cast<double>((k * 7) % 5),
                        static_cast<double>((k * 3) % 4) * 0.25);
  }
  const optapprox::CoeffSeries p(std::move(coeffs));
  for (auto _ : state) {
    benchmark::DoNotOptimize(optapprox::find_roots(p));
  }
}
BENCHMARK(BM_FindRoots)->Arg(8)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
