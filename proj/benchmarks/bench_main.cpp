#include <benchmark/benchmark.h>

#include "rcn/census.hpp"
#include "rcn/crossings.hpp"
#include "rcn/generators.hpp"

namespace {

rcn::PointSet disc(std::int64_t n) {
  return rcn::generate({rcn::GeneratorKind::RandomDisc, static_cast<std::size_t>(n), 7, 1'000'000});
}

void BM_EdgeVectorSweep(benchmark::State& state) {
  const auto set = disc(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rcn::edge_vector_sweep(set));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EdgeVectorSweep)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

void BM_EdgeVectorBruteforce(benchmark::State& state) {
  const auto set = disc(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rcn::edge_vector_bruteforce(set));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EdgeVectorBruteforce)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_CrossingsIdentity(benchmark::State& state) {
  const auto set = disc(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rcn::crossings_via_identity(set));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CrossingsIdentity)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

void BM_CrossingsBruteforce(benchmark::State& state) {
  const auto set = disc(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rcn::crossings_bruteforce(set));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CrossingsBruteforce)->RangeMultiplier(2)->Range(16, 128)->Complexity();

}  // namespace

BENCHMARK_MAIN();
