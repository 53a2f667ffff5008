#include "culturesim/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "culturesim/action.hpp"

namespace culturesim {

namespace {

void check_stream(const std::ostream& out) {
  if (!out) {
    throw std::runtime_error("csv: stream write failed");
  }
}

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
};

// Sample standard deviation; 0 for a single value.
MeanSd mean_sd(const std::vector<double>& values) {
  MeanSd out;
  const auto n = static_cast<double>(values.size());
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() > 1) {
    double squares = 0.0;
    for (const double v : values) {
      squares += (v - out.mean) * (v - out.mean);
    }
    out.sd = std::sqrt(squares / (n - 1.0));
  }
  return out;
}

// Row order contract: lexicographic on the cell key, then ascending seed.
std::vector<std::size_t> sorted_cell_order(const SweepResult& result) {
  std::vector<std::size_t> order(result.cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.cells[a].cell_key < result.cells[b].cell_key;
  });
  return order;
}

void write_header(const SweepResult& result, std::ostream& out) {
  for (const std::string& key : result.axis_keys) {
    out << key << ',';
  }
}

}  // namespace

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

void write_series_csv(const RunSeries& series, std::ostream& out) {
  out << "iteration,mean_fitness,diversity,best_fitness,leader_action_share\n";
  for (const IterationStats& stats : series.stats) {
    out << stats.iteration << ',' << format_real(stats.mean_fitness) << ',' << stats.diversity
        << ',' << format_real(stats.best_fitness) << ','
        << format_real(stats.leader_action_share) << '\n';
  }
  check_stream(out);
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  write_header(result, out);
  out << "seed,final_mean_fitness,final_diversity,convergence_iteration\n";

  for (const std::size_t cell_index : sorted_cell_order(result)) {
    const SweepCell& cell = result.cells[cell_index];
    std::vector<const RunSummary*> runs;
    runs.reserve(cell.runs.size());
    for (const RunSummary& summary : cell.runs) {
      runs.push_back(&summary);
    }
    std::sort(runs.begin(), runs.end(),
              [](const RunSummary* a, const RunSummary* b) { return a->seed < b->seed; });

    for (const RunSummary* summary : runs) {
      for (const std::string& value : cell.cell_key) {
        out << value << ',';
      }
      out << summary->seed << ',' << format_real(summary->final_mean_fitness) << ','
          << summary->final_diversity << ',' << summary->convergence_iteration << '\n';
    }
  }
  check_stream(out);
}

void write_sweep_summary_csv(const SweepResult& result, std::ostream& out) {
  write_header(result, out);
  out << "replicates,mean_early_fitness,sd_early_fitness,mean_final_fitness,sd_final_fitness,"
         "mean_final_diversity,sd_final_diversity,mean_convergence_iteration,"
         "sd_convergence_iteration,converged_runs\n";

  for (const std::size_t cell_index : sorted_cell_order(result)) {
    const SweepCell& cell = result.cells[cell_index];
    std::vector<double> early;
    std::vector<double> final_fitness;
    std::vector<double> final_diversity;
    std::vector<double> convergence;
    int converged = 0;
    for (const RunSummary& summary : cell.runs) {
      early.push_back(summary.early_mean_fitness);
      final_fitness.push_back(summary.final_mean_fitness);
      final_diversity.push_back(summary.final_diversity);
      const bool reached = summary.convergence_iteration != kNeverConverged;
      converged += reached ? 1 : 0;
      convergence.push_back(reached ? summary.convergence_iteration
                                    : cell.config.iterations + 1);
    }

    const MeanSd early_stats = mean_sd(early);
    const MeanSd final_stats = mean_sd(final_fitness);
    const MeanSd diversity_stats = mean_sd(final_diversity);
    const MeanSd convergence_stats = mean_sd(convergence);

    for (const std::string& value : cell.cell_key) {
      out << value << ',';
    }
    out << cell.runs.size() << ',' << format_real(early_stats.mean) << ','
        << format_real(early_stats.sd) << ',' << format_real(final_stats.mean) << ','
        << format_real(final_stats.sd) << ',' << format_real(diversity_stats.mean) << ','
        << format_real(diversity_stats.sd) << ',' << format_real(convergence_stats.mean) << ','
        << format_real(convergence_stats.sd) << ',' << converged << '\n';
  }
  check_stream(out);
}

void oracle_fitness_dump(std::ostream& out) {
  out << "code,head,left_arm,right_arm,left_leg,right_leg,hips,fitness\n";
  for (int code = 0; code < kActionSpaceSize; ++code) {
    const ActionVector action = decode(code);
    out << code;
    for (int i = 0; i < kComponents; ++i) {
      out << ',' << static_cast<int>(action[i]);
    }
    out << ',' << format_real(fitness(action)) << '\n';
  }
  check_stream(out);
}

}  // namespace culturesim
