#include <benchmark/benchmark.h>

#include <random>

#include "torsionlab/linalg/numeric.hpp"
#include "torsionlab/linalg/smith.hpp"
#include "torsionlab/local/experiment.hpp"
#include "torsionlab/local/partition.hpp"
#include "torsionlab/local/quotient.hpp"
#include "torsionlab/manifold/pipeline.hpp"
#include "torsionlab/sympow/sym_pow.hpp"

using namespace torsionlab;

namespace {

IntMatrix random_matrix(std::size_t n, long bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix a(n, n);
  for (auto& x : a.data()) x = dist(rng);
  return a;
}

void BM_Smith(benchmark::State& state) {
  const IntMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 10, 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariants(a));
}
BENCHMARK(BM_Smith)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_SymPow(benchmark::State& state) {
  const IntMatrix g(2, 2, std::vector<Integer>{2, 1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(sym_pow_checked(g, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_SymPow)->Arg(4)->Arg(16)->Arg(40);

void BM_StandardQuotient(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const auto lp = LocalParams::from_q(3, 12);
  const auto gens = standard_generators(lp, k, 12);
  for (auto _ : state)
    benchmark::DoNotOptimize(largest_invariant_quotient(LocalLattice::standard(2 * k + 1), gens, lp));
}
BENCHMARK(BM_StandardQuotient)->Arg(1)->Arg(4)->Arg(8);

void BM_BoundExperiment(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bound_experiment(5, static_cast<unsigned>(state.range(0)), 10, 1));
}
BENCHMARK(BM_BoundExperiment)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CircleSweep(benchmark::State& state) {
  set_working_digits(kDefaultDigits);
  const auto spec = parse_spec(std::string(TORSIONLAB_FIXTURE_DIR) + "/circle.tcx");
  const auto family = sym_pow_family(spec);
  for (auto _ : state)
    benchmark::DoNotOptimize(torsion_sweep(spec, family, 0, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_CircleSweep)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
