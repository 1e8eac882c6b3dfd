#include <benchmark/benchmark.h>

#include "pellsg/closed_form.hpp"
#include "pellsg/oracle.hpp"
#include "pellsg/semigroup.hpp"

using pellsg::GeneratorSet;

namespace {

void BM_AperyPellTriple(benchmark::State& state) {
  const auto gens = GeneratorSet::of({985, 5741, 13860});
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pellsg::compute_stats(gens, p));
}
BENCHMARK(BM_AperyPellTriple)->Arg(0)->Arg(10)->Arg(100);

void BM_AperyAllLevels(benchmark::State& state) {
  const auto gens = GeneratorSet::of({169, 985, 5741});
  const auto p_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pellsg::compute_stats_upto(gens, p_max));
}
BENCHMARK(BM_AperyAllLevels)->Arg(5)->Arg(29);

void BM_AperyWideValues(benchmark::State& state) {
  const pellsg::Integer big = pellsg::Integer(1) << 64;
  const GeneratorSet gens({pellsg::Integer(7), big + 1, big + 3});
  for (auto _ : state) benchmark::DoNotOptimize(pellsg::compute_stats(gens, 3));
}
BENCHMARK(BM_AperyWideValues);

void BM_Denumerant(benchmark::State& state) {
  const auto gens = GeneratorSet::of({985, 5741, 13860});
  const pellsg::Integer n(5482819);
  for (auto _ : state) benchmark::DoNotOptimize(pellsg::denumerant(gens, n));
}
BENCHMARK(BM_Denumerant);

void BM_SmallTripleEngineVsOracle(benchmark::State& state) {
  const auto gens = GeneratorSet::of({37, 101, 173});
  const bool oracle = state.range(0) != 0;
  for (auto _ : state) {
    if (oracle) {
      benchmark::DoNotOptimize(pellsg::oracle::brute_stats_upto(gens, 5));
    } else {
      benchmark::DoNotOptimize(pellsg::compute_stats_upto(gens, 5));
    }
  }
}
BENCHMARK(BM_SmallTripleEngineVsOracle)->Arg(0)->Arg(1);

void BM_ClosedFormGenus(benchmark::State& state) {
  const pellsg::PellParams u(2);
  for (auto _ : state) benchmark::DoNotOptimize(pellsg::odd_even_genus(u, 3, 4, 28));
}
BENCHMARK(BM_ClosedFormGenus);

}  // namespace
BENCHMARK_MAIN();
