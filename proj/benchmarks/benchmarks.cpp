#include <benchmark/benchmark.h>

#include <random>

#include "polycurve/hull.hpp"
#include "polycurve/solver.hpp"
#include "polycurve/tropical.hpp"

using namespace polycurve;

namespace {

std::vector<Support> first_two_supports(std::size_t n) {
  const auto all = supports(cyclic_system(n));
  return {all[0], all[1]};
}

}  // namespace

static void BM_CayleyFacetsCyclic(benchmark::State& state) {
  const auto cfg = cayley_embedding(first_two_supports(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(facet_enumeration(cfg));
}
BENCHMARK(BM_CayleyFacetsCyclic)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_RandomHull(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> c(-20, 20);
  IntegerMatrix pts(40, IntegerVector(d));
  for (auto& p : pts)
    for (auto& x : p) x = c(rng);
  const PointConfiguration cfg(d, pts);
  for (auto _ : state) benchmark::DoNotOptimize(facet_enumeration(cfg));
}
BENCHMARK(BM_RandomHull)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_PretropismsCyclic(benchmark::State& state) {
  const PolySystem sys = cyclic_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pretropisms(sys));
}
BENCHMARK(BM_PretropismsCyclic)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_SolveCyclic(benchmark::State& state) {
  const PolySystem sys = cyclic_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(sys));
}
BENCHMARK(BM_SolveCyclic)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
