#include <benchmark/benchmark.h>

#include "pertsum/eigensolver.hpp"
#include "pertsum/models.hpp"
#include "pertsum/perturbation.hpp"
#include "pertsum/verify.hpp"

namespace {

using namespace pertsum;

void BM_JacobiEigendecompose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const HermitianMatrix h = random_hermitian(42, n, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_eigendecompose(h));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JacobiEigendecompose)->RangeMultiplier(2)->Range(2, 128)->Complexity();

void BM_FirstOrder(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SpectralDecomposition spec = jacobi_eigendecompose(random_hermitian(7, n, 1.0));
  const HermitianMatrix perturbation = random_hermitian(8, n, 1.0);
  const StateVector b = StateVector::basis_state(n, n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(first_order(spec, perturbation, b, 0.01));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FirstOrder)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_LevelSweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const HermitianMatrix h = random_hermitian(3, n, 1.0);
  const HermitianMatrix perturbation = random_hermitian(4, n, 1.0);
  const auto grid = default_strength_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(level_sweep(h, perturbation, grid));
  }
}
BENCHMARK(BM_LevelSweep)->Arg(6)->Arg(16);

void BM_BoxPotentialMatrix(benchmark::State& state) {
  const BoxModelSpec spec{static_cast<std::size_t>(state.range(0)), 1.0, {PotentialKind::Quadratic, 1.0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(box_potential_matrix(spec));
  }
}
BENCHMARK(BM_BoxPotentialMatrix)->Arg(4)->Arg(16);

}  // namespace

// libbenchmark_main.a on some distributions ships LTO bytecode from a
// different compiler release, so the entry point lives here.
BENCHMARK_MAIN();
