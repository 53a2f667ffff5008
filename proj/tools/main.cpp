// Command-line front end: run one simulation, sweep a parameter grid, run a
// named experiment preset, or dump the full fitness table. All outputs are
// deterministic CSV; see README.md for the formats.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "culturesim/config_file.hpp"
#include "culturesim/csv.hpp"
#include "culturesim/experiments.hpp"

namespace {

using namespace culturesim;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename WriteFn>
void write_file(const std::string& path, WriteFn&& write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + path + "'");
  }
  write(out);
  out.flush();
  if (!out) {
    throw std::runtime_error("failed writing '" + path + "'");
  }
}

// SIM_THREADS caps replicate parallelism; unset means one worker per
// hardware thread.
int thread_cap_from_env() {
  const char* raw = std::getenv("SIM_THREADS");
  if (raw == nullptr || *raw == '\0') {
    return 0;
  }
  try {
    const int cap = std::stoi(raw);
    if (cap >= 1) {
      return cap;
    }
  } catch (const std::exception&) {
    // fall through to the error below
  }
  throw std::runtime_error("SIM_THREADS must be a positive integer, got '" + std::string(raw) +
                           "'");
}

struct RunOptions {
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

struct SweepCliOptions {
  std::string config_path;
  std::string axes_spec;
  std::string out_path;
  int replicates = 1;
  std::uint64_t seed0 = 1;
  int max_runs = 100000;
};

struct PresetOptions {
  std::string name;
  std::string out_dir;
  int replicates = 30;
  std::uint64_t seed0 = 1;
};

void run_command(const RunOptions& options) {
  RunConfig config = parse_config(read_file(options.config_path));
  if (options.seed_set) {
    config.seed = options.seed;
  }
  const RunSeries series = run(config);
  write_file(options.out_path, [&](std::ostream& out) { write_series_csv(series, out); });
}

void sweep_command(const SweepCliOptions& options) {
  const RunConfig base = parse_config(read_file(options.config_path));
  const std::vector<SweepAxis> axes = parse_axes(options.axes_spec);

  SweepOptions sweep_options;
  sweep_options.replicates = options.replicates;
  sweep_options.seed0 = options.seed0;
  sweep_options.max_runs = options.max_runs;
  sweep_options.threads = thread_cap_from_env();

  const SweepResult result = sweep(base, axes, sweep_options);
  write_file(options.out_path, [&](std::ostream& out) { write_sweep_csv(result, out); });
}

void preset_command(const PresetOptions& options) {
  const int threads = thread_cap_from_env();
  SweepResult result;
  if (options.name == "e1") {
    result = preset_e1_leadership(options.replicates, options.seed0, threads);
  } else if (options.name == "e2") {
    result = preset_e2_frequency(options.replicates, options.seed0, threads);
  } else {
    result = preset_e3_magnitude(options.replicates, options.seed0, threads);
  }

  std::filesystem::create_directories(options.out_dir);
  const std::filesystem::path dir(options.out_dir);
  write_file((dir / (options.name + "_runs.csv")).string(),
             [&](std::ostream& out) { write_sweep_csv(result, out); });
  write_file((dir / (options.name + "_summary.csv")).string(),
             [&](std::ostream& out) { write_sweep_summary_csv(result, out); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"culturesim: agents on a toroidal grid invent and imitate actions, "
               "optionally guided by a broadcasting leader"};
  app.require_subcommand(1);

  RunOptions run_options;
  CLI::App* run_cmd = app.add_subcommand("run", "Simulate one configuration and write its "
                                                "per-iteration statistics as CSV");
  run_cmd->add_option("--config", run_options.config_path, "Path to a key = value config file")
      ->required();
  CLI::Option* seed_option =
      run_cmd->add_option("--seed", run_options.seed, "Override the seed from the config file");
  run_cmd->add_option("--out", run_options.out_path, "Output CSV path")->required();

  SweepCliOptions sweep_options;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Run a Cartesian parameter grid with replicates");
  sweep_cmd->add_option("--config", sweep_options.config_path, "Base config file")->required();
  sweep_cmd
      ->add_option("--axes", sweep_options.axes_spec,
                   "Swept parameters, e.g. 'leader_p_invent=0,0.5,1;follower_p_invent=0.02,0.5'")
      ->required();
  sweep_cmd->add_option("--replicates", sweep_options.replicates, "Replicates per cell")
      ->default_val(1);
  sweep_cmd->add_option("--seed0", sweep_options.seed0, "First seed of the sweep")
      ->default_val(1);
  sweep_cmd->add_option("--max-runs", sweep_options.max_runs, "Reject sweeps larger than this")
      ->default_val(100000);
  sweep_cmd->add_option("--out", sweep_options.out_path, "Output CSV path")->required();

  PresetOptions preset_options;
  CLI::App* preset_cmd =
      app.add_subcommand("preset", "Run a canned experiment (e1: leadership on/off, "
                                   "e2: invention frequency grid, e3: creativity magnitude)");
  preset_cmd->add_option("name", preset_options.name, "Which preset to run")
      ->required()
      ->check(CLI::IsMember({"e1", "e2", "e3"}));
  preset_cmd->add_option("--replicates", preset_options.replicates, "Replicates per cell")
      ->default_val(30);
  preset_cmd->add_option("--seed0", preset_options.seed0, "First seed")->default_val(1);
  preset_cmd
      ->add_option("--out-dir", preset_options.out_dir,
                   "Directory for <name>_runs.csv and <name>_summary.csv")
      ->required();

  std::string oracle_out;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-fitness", "Dump the fitness of all 729 actions, ordered by ternary code");
  oracle_cmd->add_option("--out", oracle_out, "Output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(run_cmd)) {
      run_options.seed_set = seed_option->count() > 0;
      run_command(run_options);
    } else if (app.got_subcommand(sweep_cmd)) {
      sweep_command(sweep_options);
    } else if (app.got_subcommand(preset_cmd)) {
      preset_command(preset_options);
    } else if (app.got_subcommand(oracle_cmd)) {
      write_file(oracle_out, [](std::ostream& out) { oracle_fitness_dump(out); });
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
  return 0;
}
