#include <benchmark/benchmark.h>

#include "inspectra/colgen.hpp"
#include "inspectra/covers.hpp"
#include "inspectra/decomp.hpp"
#include "inspectra/exact.hpp"
#include "inspectra/game.hpp"
#include "inspectra/generator.hpp"

namespace {

using namespace inspectra;

DetectionModel bench_model(int nodes, int components, std::uint64_t seed) {
  GenConfig cfg;
  cfg.node_count = nodes;
  cfg.component_count = components;
  cfg.mean_monitor = 2.5;
  cfg.seed = seed;
  return generate(cfg);
}

void BM_MscExact(benchmark::State& state) {
  const auto m = bench_model(static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(0)) + 4, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_msc(m, SolveMode::kExact));
  }
}
BENCHMARK(BM_MscExact)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

void BM_MscGreedy(benchmark::State& state) {
  const auto m = bench_model(static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(0)) + 4, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_msc(m, SolveMode::kGreedy));
  }
}
BENCHMARK(BM_MscGreedy)->Arg(16)->Arg(64)->Arg(256);

void BM_ExactOracle(benchmark::State& state) {
  const auto m = bench_model(9, 10, 7);
  GameParams params;
  params.b1 = static_cast<int>(state.range(0));
  params.b2 = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_exact_ne(m, params));
  }
}
BENCHMARK(BM_ExactOracle)->Arg(1)->Arg(2)->Arg(3);

void BM_Colgen(benchmark::State& state) {
  const auto m = bench_model(static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(0)) + 6, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_colgen(m, 2));
  }
}
BENCHMARK(BM_Colgen)->Arg(10)->Arg(14)->Arg(18);

void BM_Decompose(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  MarginalTarget target;
  target.b2 = 3;
  target.rho.assign(m, 3.0 / m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(target));
  }
}
BENCHMARK(BM_Decompose)->Arg(8)->Arg(16)->Arg(32);

void BM_PayoffEvaluation(benchmark::State& state) {
  const auto m = bench_model(12, 16, 3);
  const auto cover = solve_msc(m, SolveMode::kExact);
  const auto packing = solve_msp(m, SolveMode::kExact);
  const auto s1 = cyclic_strategy(Side::kDefender, cover.cover.v,
                                  std::max(1, cover.size - 1));
  const auto s2 = cyclic_strategy(Side::kAttacker, packing.packing.v, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_payoffs(m, s1, s2));
  }
}
BENCHMARK(BM_PayoffEvaluation);

}  // namespace

BENCHMARK_MAIN();
