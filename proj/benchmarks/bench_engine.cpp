#include <benchmark/benchmark.h>

#include <numbers>

#include "triphoton/criteria.hpp"
#include "triphoton/evolution.hpp"

namespace {

using namespace triphoton;

// Nested commutators from scratch, bypassing the process-wide cache.
void BM_OmegaChain(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto h = evolution::hamiltonian_kernel();
  for (auto _ : state) {
    algebra::ExactPolynomial omega = algebra::annihilation(Mode::one);
    for (int n = 1; n <= order; ++n) omega = algebra::commutator(h, omega);
    benchmark::DoNotOptimize(omega);
  }
}
BENCHMARK(BM_OmegaChain)->Arg(5)->Arg(8);

void BM_NormalOrderProduct(benchmark::State& state) {
  const auto l = algebra::Monomial::make({3, 2, 1}, {2, 3, 3});
  const auto r = algebra::Monomial::make({3, 3, 2}, {1, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(algebra::normal_order_product(l, r));
}
BENCHMARK(BM_NormalOrderProduct);

void BM_EvolveAll(benchmark::State& state) {
  evolution::EvolutionParams p;
  p.order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evolution::evolve_all(p));
}
BENCHMARK(BM_EvolveAll)->Arg(5)->Arg(8);

void BM_ComputeS(benchmark::State& state) {
  const evolution::EvolutionParams p;
  const auto modes = evolution::evolve_all(p);
  const auto w = criteria::CombinationWeights::from_beta(std::numbers::sqrt2, {0.0, std::numbers::pi, std::numbers::pi});
  const auto seed = SeedState::full_seed(1e11, std::numbers::pi / 2);
  for (auto _ : state) benchmark::DoNotOptimize(criteria::compute_S(w, seed, modes));
}
BENCHMARK(BM_ComputeS)->Unit(benchmark::kMillisecond);

void BM_FastS(benchmark::State& state) {
  const evolution::EvolutionParams p;
  const auto modes = evolution::evolve_all(p);
  const auto w = criteria::CombinationWeights::from_beta(std::numbers::sqrt2, {0.0, std::numbers::pi, std::numbers::pi});
  const moments::ModeMoments mm(modes, SeedState::full_seed(1e11, std::numbers::pi / 2));
  for (auto _ : state) benchmark::DoNotOptimize(criteria::fast_S(mm, w));
}
BENCHMARK(BM_FastS);

void BM_ModeMoments(benchmark::State& state) {
  const evolution::EvolutionParams p;
  const auto modes = evolution::evolve_all(p);
  const auto seed = SeedState::full_seed(1e11, std::numbers::pi / 2);
  for (auto _ : state) benchmark::DoNotOptimize(moments::ModeMoments(modes, seed));
}
BENCHMARK(BM_ModeMoments)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
