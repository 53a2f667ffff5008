#ifndef CULTURESIM_CSV_HPP
#define CULTURESIM_CSV_HPP

#include <iosfwd>
#include <string>

#include "culturesim/experiments.hpp"

namespace culturesim {

// Fixed six-decimal rendering used for every real in CSV output, so equal
// results are byte-identical across runs and platforms.
std::string format_real(double value);

// Header `iteration,mean_fitness,diversity,best_fitness,leader_action_share`,
// one row per iteration including iteration 0, `\n` line endings.
void write_series_csv(const RunSeries& series, std::ostream& out);

// Long format: one row per (cell, replicate), columns are the axis values
// followed by seed, final_mean_fitness, final_diversity and
// convergence_iteration (-1 when never reached). Rows are sorted
// lexicographically by cell key, then by seed.
void write_sweep_csv(const SweepResult& result, std::ostream& out);

// One row per cell with replicate count, mean and standard deviation of the
// early and final mean fitness, final diversity and convergence iteration
// (never-converged runs count as iterations + 1), plus how many converged.
void write_sweep_summary_csv(const SweepResult& result, std::ostream& out);

// All 729 actions with their fitness, ordered by ternary encoding.
void oracle_fitness_dump(std::ostream& out);

}  // namespace culturesim

#endif  // CULTURESIM_CSV_HPP
