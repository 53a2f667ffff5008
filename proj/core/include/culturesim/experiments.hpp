#ifndef CULTURESIM_EXPERIMENTS_HPP
#define CULTURESIM_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "culturesim/metrics.hpp"
#include "culturesim/run_config.hpp"

namespace culturesim {

// A run counts as converged once mean fitness reaches this fraction of the
// landscape maximum.
inline constexpr double kConvergenceFraction = 0.9;

// Sentinel for runs that never reach the convergence threshold.
inline constexpr int kNeverConverged = -1;

// Iteration at which sweeps sample the early-phase mean fitness.
inline constexpr int kDefaultEarlyCheckpoint = 5;

// Per-iteration statistics of one run. stats has length iterations + 1 and
// includes the initial state at index 0.
struct RunSeries {
  RunConfig config;
  std::vector<IterationStats> stats;
};

// Runs one simulation to completion. Deterministic in (config, seed);
// throws std::invalid_argument before simulating if the config is invalid.
RunSeries run(const RunConfig& config);

// First iteration whose mean fitness reaches kConvergenceFraction of the
// landscape maximum, or kNeverConverged.
int convergence_iteration(const RunSeries& series);

// Headline numbers kept per replicate inside a sweep.
struct RunSummary {
  std::uint64_t seed = 0;
  double early_mean_fitness = 0.0;  // mean fitness at the early checkpoint
  double final_mean_fitness = 0.0;
  int final_diversity = 0;
  int convergence_iteration = kNeverConverged;
};

// The checkpoint is clamped to the series length for very short runs.
RunSummary summarize(const RunSeries& series, int early_checkpoint = kDefaultEarlyCheckpoint);

// One swept parameter: a config key and the textual values it takes.
struct SweepAxis {
  std::string key;
  std::vector<std::string> values;
};

// One grid cell: the resolved config plus every replicate's summary.
struct SweepCell {
  std::vector<std::string> cell_key;  // canonical axis values, in axis order
  RunConfig config;                   // per-replicate seeds are in runs[]
  std::vector<RunSummary> runs;
};

struct SweepResult {
  std::vector<std::string> axis_keys;
  std::vector<SweepCell> cells;
  int replicates = 0;
  std::uint64_t seed0 = 0;
  int early_checkpoint = kDefaultEarlyCheckpoint;
};

struct SweepOptions {
  int replicates = 1;
  std::uint64_t seed0 = 1;
  // Cells x replicates beyond this cap are rejected up front.
  int max_runs = 100000;
  // Worker threads for replicate-level parallelism; 0 = hardware concurrency.
  int threads = 0;
  int early_checkpoint = kDefaultEarlyCheckpoint;
};

// Runs the full Cartesian grid of axes over the base config. Cells are
// enumerated with the first axis outermost; replicate seeds are assigned
// seed0, seed0 + 1, ... in (cell, replicate) order. Results land in slots
// keyed by (cell, replicate), so the outcome is independent of thread count.
SweepResult sweep(const RunConfig& base, const std::vector<SweepAxis>& axes,
                  const SweepOptions& options);

// Broadcast off vs on with leader and followers at the same invention
// parameters (p_invent = 0.1, single-component inventions, 18 iterations).
SweepResult preset_e1_leadership(int replicates, std::uint64_t seed0, int threads = 0);

// Leader invention frequency {0, 0.25, 0.5, 0.75, 1} crossed with follower
// invention frequency {0.02, 0.1, 0.5}, broadcast on, 12 iterations.
SweepResult preset_e2_frequency(int replicates, std::uint64_t seed0, int threads = 0);

// Leader creativity magnitude {0.2, 0.4, 0.6, 0.8, 1} with an always-inventing
// leader and rarely inventing followers (p_invent = 0.02), broadcast on.
SweepResult preset_e3_magnitude(int replicates, std::uint64_t seed0, int threads = 0);

}  // namespace culturesim

#endif  // CULTURESIM_EXPERIMENTS_HPP
