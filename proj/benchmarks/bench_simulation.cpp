#include <benchmark/benchmark.h>

#include "culturesim/dynamics.hpp"
#include "culturesim/experiments.hpp"

using namespace culturesim;

static void BM_FitnessAllActions(benchmark::State& state) {
  double sink = 0.0;
  for (auto _ : state) {
    for (int code = 0; code < kActionSpaceSize; ++code) {
      sink += fitness(decode(code));
    }
  }
  benchmark::DoNotOptimize(sink);
}
BENCHMARK(BM_FitnessAllActions);

static void BM_Step(benchmark::State& state) {
  RunConfig config;
  config.broadcast_enabled = true;
  config.follower_p_invent = 0.1;
  config.leader_p_invent = 0.1;
  config.seed = 11;
  World world = new_world(config);
  for (auto _ : state) {
    step(world);
  }
  state.SetItemsProcessed(state.iterations() * world.n_agents());
}
BENCHMARK(BM_Step);

static void BM_DefaultRun(benchmark::State& state) {
  RunConfig config;
  config.broadcast_enabled = true;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = seed++;
    benchmark::DoNotOptimize(run(config));
  }
}
BENCHMARK(BM_DefaultRun);

static void BM_PresetE1Cell(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(preset_e1_leadership(2, 1, 1));
  }
}
BENCHMARK(BM_PresetE1Cell);

BENCHMARK_MAIN();
