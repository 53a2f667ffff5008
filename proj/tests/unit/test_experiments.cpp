#include <stdexcept>

#include "culturesim/experiments.hpp"
#include "doctest.h"

using namespace culturesim;

TEST_CASE("run produces one stats row per iteration plus the initial state") {
  RunConfig config;
  config.seed = 5;
  const RunSeries series = run(config);

  REQUIRE(series.stats.size() == 101);
  CHECK(series.stats.front().iteration == 0);
  CHECK(series.stats.front().mean_fitness == 0.0);
  CHECK(series.stats.front().diversity == 1);
  CHECK(series.stats.back().iteration == 100);
  for (const IterationStats& stats : series.stats) {
    CHECK(stats.leader_action_share == 0.0);  // no leader without broadcast
  }
}

TEST_CASE("a society that never invents never moves") {
  RunConfig config;
  config.broadcast_enabled = true;
  config.leader_p_invent = 0.0;
  config.follower_p_invent = 0.0;
  config.iterations = 30;
  config.seed = 8;
  const RunSeries series = run(config);

  for (const IterationStats& stats : series.stats) {
    IterationStats expected = series.stats.front();
    expected.iteration = stats.iteration;
    CHECK(stats == expected);
  }
}

TEST_CASE("run is deterministic in (config, seed)") {
  RunConfig config;
  config.broadcast_enabled = true;
  config.follower_p_invent = 0.2;
  config.seed = 99;
  const RunSeries first = run(config);
  const RunSeries second = run(config);
  REQUIRE(first.stats.size() == second.stats.size());
  for (std::size_t i = 0; i < first.stats.size(); ++i) {
    CHECK(first.stats[i] == second.stats[i]);
  }
}

TEST_CASE("run rejects invalid configs before simulating") {
  RunConfig config;
  config.iterations = 0;
  CHECK_THROWS_AS(run(config), std::invalid_argument);
}

TEST_CASE("convergence_iteration finds the first crossing") {
  RunSeries series;
  series.config.iterations = 3;
  for (int i = 0; i <= 3; ++i) {
    IterationStats stats;
    stats.iteration = i;
    stats.mean_fitness = 3.0 * i;  // 0, 3, 6, 9
    series.stats.push_back(stats);
  }
  CHECK(convergence_iteration(series) == 3);

  series.stats[2].mean_fitness = 9.5;
  CHECK(convergence_iteration(series) == 2);

  for (IterationStats& stats : series.stats) {
    stats.mean_fitness = 1.0;
  }
  CHECK(convergence_iteration(series) == kNeverConverged);
}

TEST_CASE("summarize reads the checkpoint and final rows") {
  RunSeries series;
  series.config.iterations = 10;
  series.config.seed = 321;
  for (int i = 0; i <= 10; ++i) {
    IterationStats stats;
    stats.iteration = i;
    stats.mean_fitness = i;
    stats.diversity = 11 - i;
    series.stats.push_back(stats);
  }
  const RunSummary summary = summarize(series, 5);
  CHECK(summary.seed == 321);
  CHECK(summary.early_mean_fitness == 5.0);
  CHECK(summary.final_mean_fitness == 10.0);
  CHECK(summary.final_diversity == 1);
  CHECK(summary.convergence_iteration == 9);

  // Checkpoints beyond the series clamp to the final row.
  CHECK(summarize(series, 50).early_mean_fitness == 10.0);
}

TEST_CASE("sweep assigns seeds in cell-major, replicate-minor order") {
  RunConfig base;
  base.iterations = 2;

  SweepOptions options;
  options.replicates = 3;
  options.seed0 = 40;
  options.threads = 1;
  const SweepResult result = sweep(base, {{"follower_p_invent", {"0.5"}}}, options);

  REQUIRE(result.cells.size() == 1);
  REQUIRE(result.cells[0].runs.size() == 3);
  CHECK(result.cells[0].runs[0].seed == 40);
  CHECK(result.cells[0].runs[1].seed == 41);
  CHECK(result.cells[0].runs[2].seed == 42);
}

TEST_CASE("sweep covers the Cartesian grid with the first axis outermost") {
  RunConfig base;
  base.iterations = 1;

  SweepOptions options;
  options.replicates = 2;
  options.seed0 = 0;
  const SweepResult result =
      sweep(base,
            {{"follower_p_invent", {"0", "0.5", "1"}}, {"width", {"4", "5"}}},
            options);

  REQUIRE(result.cells.size() == 6);
  CHECK(result.axis_keys == std::vector<std::string>{"follower_p_invent", "width"});
  CHECK(result.cells[0].cell_key == std::vector<std::string>{"0.000000", "4"});
  CHECK(result.cells[1].cell_key == std::vector<std::string>{"0.000000", "5"});
  CHECK(result.cells[2].cell_key == std::vector<std::string>{"0.500000", "4"});
  CHECK(result.cells[5].cell_key == std::vector<std::string>{"1.000000", "5"});
  // Seeds continue across cells: cell 1 starts at seed0 + replicates.
  CHECK(result.cells[1].runs[0].seed == 2);
  CHECK(result.cells[5].runs[1].seed == 11);
}

TEST_CASE("a 5x4 grid with 30 replicates is 600 runs") {
  RunConfig base;
  base.iterations = 1;
  base.width = 2;
  base.height = 2;

  SweepOptions options;
  options.replicates = 30;
  options.seed0 = 100;
  const SweepResult result =
      sweep(base,
            {{"leader_p_invent", {"0", "0.25", "0.5", "0.75", "1"}},
             {"follower_p_invent", {"0.1", "0.2", "0.3", "0.4"}}},
            options);

  REQUIRE(result.cells.size() == 20);
  int total = 0;
  for (const SweepCell& cell : result.cells) {
    total += static_cast<int>(cell.runs.size());
  }
  CHECK(total == 600);
  CHECK(result.cells.back().runs.back().seed == 100 + 599);
}

TEST_CASE("sweep results are identical across thread counts and reruns") {
  RunConfig base;
  base.iterations = 20;
  base.broadcast_enabled = true;

  SweepOptions serial;
  serial.replicates = 4;
  serial.seed0 = 7;
  serial.threads = 1;
  SweepOptions parallel = serial;
  parallel.threads = 4;

  const std::vector<SweepAxis> axes = {{"leader_p_invent", {"0.1", "0.9"}}};
  const SweepResult a = sweep(base, axes, serial);
  const SweepResult b = sweep(base, axes, parallel);

  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t c = 0; c < a.cells.size(); ++c) {
    REQUIRE(a.cells[c].runs.size() == b.cells[c].runs.size());
    for (std::size_t r = 0; r < a.cells[c].runs.size(); ++r) {
      CHECK(a.cells[c].runs[r].seed == b.cells[c].runs[r].seed);
      CHECK(a.cells[c].runs[r].final_mean_fitness == b.cells[c].runs[r].final_mean_fitness);
      CHECK(a.cells[c].runs[r].final_diversity == b.cells[c].runs[r].final_diversity);
      CHECK(a.cells[c].runs[r].convergence_iteration == b.cells[c].runs[r].convergence_iteration);
      CHECK(a.cells[c].runs[r].early_mean_fitness == b.cells[c].runs[r].early_mean_fitness);
    }
  }
}

TEST_CASE("sweep rejects bad requests") {
  RunConfig base;
  SweepOptions options;
  options.replicates = 0;
  CHECK_THROWS_AS(sweep(base, {{"width", {"4"}}}, options), std::invalid_argument);

  options.replicates = 1;
  CHECK_THROWS_AS(sweep(base, {}, options), std::invalid_argument);
  CHECK_THROWS_AS(sweep(base, {{"width", {}}}, options), std::invalid_argument);
  CHECK_THROWS_AS(sweep(base, {{"seed", {"1", "2"}}}, options), std::invalid_argument);
  CHECK_THROWS_AS(sweep(base, {{"width", {"4"}}, {"width", {"5"}}}, options),
                  std::invalid_argument);

  options.max_runs = 5;
  options.replicates = 3;
  CHECK_THROWS_AS(sweep(base, {{"width", {"4", "5"}}}, options), std::invalid_argument);
}

TEST_CASE("degenerate grids simulate without violating invariants") {
  for (const auto [width, height] : {std::pair{2, 2}, std::pair{1, 4}}) {
    RunConfig config;
    config.width = width;
    config.height = height;
    config.iterations = 25;
    config.broadcast_enabled = true;
    config.leader_p_invent = 0.5;
    config.follower_p_invent = 0.5;
    config.seed = 99;
    const RunSeries series = run(config);
    REQUIRE(series.stats.size() == 26);
    for (const IterationStats& stats : series.stats) {
      CHECK(stats.diversity >= 1);
      CHECK(stats.diversity <= width * height);
      CHECK(stats.mean_fitness <= stats.best_fitness);
      CHECK(stats.best_fitness <= 10.0);
    }
  }
}

TEST_CASE("presets rerun bit-identically") {
  const SweepResult first = preset_e1_leadership(3, 5, 1);
  const SweepResult second = preset_e1_leadership(3, 5, 2);
  REQUIRE(first.cells.size() == second.cells.size());
  for (std::size_t c = 0; c < first.cells.size(); ++c) {
    REQUIRE(first.cells[c].cell_key == second.cells[c].cell_key);
    REQUIRE(first.cells[c].runs.size() == second.cells[c].runs.size());
    for (std::size_t r = 0; r < first.cells[c].runs.size(); ++r) {
      const RunSummary& a = first.cells[c].runs[r];
      const RunSummary& b = second.cells[c].runs[r];
      CHECK(a.seed == b.seed);
      CHECK(a.early_mean_fitness == b.early_mean_fitness);
      CHECK(a.final_mean_fitness == b.final_mean_fitness);
      CHECK(a.final_diversity == b.final_diversity);
      CHECK(a.convergence_iteration == b.convergence_iteration);
    }
  }
}

TEST_CASE("presets define the documented grids") {
  // One replicate and tiny seeds keep this fast; the directional behavior is
  // covered by the acceptance suite.
  const SweepResult e1 = preset_e1_leadership(1, 1, 1);
  REQUIRE(e1.cells.size() == 2);
  CHECK(e1.axis_keys == std::vector<std::string>{"broadcast_enabled"});
  CHECK_FALSE(e1.cells[0].config.broadcast_enabled);
  CHECK(e1.cells[1].config.broadcast_enabled);
  // Leader and followers share the same parameters in both cells.
  CHECK(e1.cells[1].config.leader_p_invent == e1.cells[1].config.follower_p_invent);
  CHECK(e1.cells[1].config.leader_r_change == e1.cells[1].config.follower_r_change);

  const SweepResult e2 = preset_e2_frequency(1, 1, 1);
  REQUIRE(e2.cells.size() == 15);
  for (const SweepCell& cell : e2.cells) {
    CHECK(cell.config.broadcast_enabled);
  }

  const SweepResult e3 = preset_e3_magnitude(1, 1, 1);
  REQUIRE(e3.cells.size() == 5);
  for (const SweepCell& cell : e3.cells) {
    CHECK(cell.config.broadcast_enabled);
    CHECK(cell.config.leader_p_invent == 1.0);
    CHECK(cell.config.follower_p_invent == 0.02);
  }
}
