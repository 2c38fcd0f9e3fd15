#include "gdlca/gdlca.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace gdlca;

void BM_Nullspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::vector<RatVector> rows(n / 2, RatVector(n));
  for (auto& r : rows) {
    for (auto& x : r) x = entry(rng);
  }
  const RatMatrix m = RatMatrix::from_dense(rows, n);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace_basis(m));
}
BENCHMARK(BM_Nullspace)->Arg(16)->Arg(32)->Arg(64);

void BM_ExtensionsTheorem(benchmark::State& state) {
  const GDBialgebra a = catalog_build("loop_hv_cyclic", {{"m", std::to_string(state.range(0))}});
  for (auto _ : state) benchmark::DoNotOptimize(solve_extensions_theorem(a));
}
BENCHMARK(BM_ExtensionsTheorem)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ExtensionsDirect(benchmark::State& state) {
  const GDBialgebra a = catalog_build("loop_hv_cyclic", {{"m", std::to_string(state.range(0))}});
  for (auto _ : state) benchmark::DoNotOptimize(solve_extensions_direct(a, 6));
}
BENCHMARK(BM_ExtensionsDirect)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DerivationsDirect(benchmark::State& state) {
  const QuadraticLCA r(catalog_build("r_alpha_beta", {{"alpha", "1"}, {"beta", "0"}}));
  for (auto _ : state) benchmark::DoNotOptimize(solve_derivations_direct(r, 3, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_DerivationsDirect)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_DerivationsTheorem(benchmark::State& state) {
  const QuadraticLCA r(catalog_build("r_alpha_beta", {{"alpha", "1"}, {"beta", "0"}}));
  for (auto _ : state) benchmark::DoNotOptimize(solve_derivations_theorem(r, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_DerivationsTheorem)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CoeffCocycle(benchmark::State& state) {
  const GDBialgebra a = catalog_build("vir");
  CentralCocycle q = CentralCocycle::zero(1);
  q.alpha[3][0][0] = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_coeff_cocycle(a, q, state.range(0), static_cast<std::size_t>(-1)));
  }
}
BENCHMARK(BM_CoeffCocycle)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
