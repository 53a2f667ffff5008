#ifndef CULTURESIM_METRICS_HPP
#define CULTURESIM_METRICS_HPP

#include "culturesim/world.hpp"

namespace culturesim {

// Society-level measurements taken from one world snapshot.
struct IterationStats {
  int iteration = 0;
  double mean_fitness = 0.0;
  int diversity = 0;  // number of distinct actions implemented
  double best_fitness = 0.0;
  // Fraction of agents whose action equals the leader's; 0 when no leader.
  double leader_action_share = 0.0;

  bool operator==(const IterationStats&) const = default;
};

double mean_fitness(const World& world);
int diversity(const World& world);
double best_fitness(const World& world);
double leader_action_share(const World& world);

// Bundles every statistic from one snapshot.
IterationStats collect(const World& world);

}  // namespace culturesim

#endif  // CULTURESIM_METRICS_HPP
