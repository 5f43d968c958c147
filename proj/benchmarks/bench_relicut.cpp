#include <benchmark/benchmark.h>

#include "relicut/detapprox.hpp"
#include "relicut/dnf.hpp"
#include "relicut/estimators.hpp"
#include "relicut/graph_io.hpp"
#include "relicut/oracle.hpp"
#include "relicut/tutte.hpp"

using namespace relicut;

static void BM_MinCut(benchmark::State& state) {
  const Multigraph g = make_random_graph(state.range(0), 4 * state.range(0), 0.1, 3);
  const WeightedView w = WeightedView::failure_log(g);
  for (auto _ : state) benchmark::DoNotOptimize(min_cut_value(g, &w));
}
BENCHMARK(BM_MinCut)->Arg(16)->Arg(64)->Arg(256);

static void BM_EnumerateAlphaMinCuts(benchmark::State& state) {
  const Multigraph g = make_cycle(state.range(0), 0.5);
  EnumerationOptions o;
  for (auto _ : state) {
    ++o.seed;
    benchmark::DoNotOptimize(enumerate_alpha_min_cuts(g, nullptr, 1.0, o).cuts.size());
  }
}
BENCHMARK(BM_EnumerateAlphaMinCuts)->Arg(8)->Arg(16)->Arg(32);

static void BM_FailMonteCarlo(benchmark::State& state) {
  const Multigraph g = make_bundled_cycle(8, 2, 0.3);
  EstimateOptions o;
  o.branch = Branch::monte_carlo;
  for (auto _ : state) {
    ++o.seed;
    benchmark::DoNotOptimize(estimate_fail(g, o).value);
  }
}
BENCHMARK(BM_FailMonteCarlo)->Unit(benchmark::kMillisecond);

static void BM_FailCutEnumeration(benchmark::State& state) {
  const Multigraph g = make_bundled_cycle(state.range(0), 4, 0.3);
  EstimateOptions o;
  for (auto _ : state) {
    ++o.seed;
    benchmark::DoNotOptimize(estimate_fail(g, o).value);
  }
}
BENCHMARK(BM_FailCutEnumeration)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_DnfCoverage(benchmark::State& state) {
  const Multigraph g = make_cycle(state.range(0), 0.01);
  const DnfFormula f = build_cut_failure_formula(exact_cut_list(g, 1.0), g);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_union_probability(f, 0.05, 0.01, ++seed).value);
}
BENCHMARK(BM_DnfCoverage)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_PasFail(benchmark::State& state) {
  const Multigraph g = make_bundled_cycle(6, 4, 0.1);
  DetApproxOptions o;
  o.alpha_cap = 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(pas_fail(g, o).estimate.value);
}
BENCHMARK(BM_PasFail)->Unit(benchmark::kMillisecond);

static void BM_ExactFail(benchmark::State& state) {
  const Multigraph g = make_random_graph(8, state.range(0), 0.3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(exact_fail(g));
}
BENCHMARK(BM_ExactFail)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_ExactTutte(benchmark::State& state) {
  const Multigraph g = make_random_graph(6, state.range(0), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(exact_tutte(g, 2.0, 3.0));
}
BENCHMARK(BM_ExactTutte)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
