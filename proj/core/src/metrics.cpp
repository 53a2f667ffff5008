#include "culturesim/metrics.hpp"

#include <algorithm>
#include <bitset>

namespace culturesim {

double mean_fitness(const World& world) {
  double sum = 0.0;
  for (const Agent& agent : world.agents) {
    sum += agent.current_fitness;
  }
  return sum / static_cast<double>(world.n_agents());
}

int diversity(const World& world) {
  std::bitset<kActionSpaceSize> seen;
  for (const Agent& agent : world.agents) {
    seen.set(static_cast<std::size_t>(encode(agent.current_action)));
  }
  return static_cast<int>(seen.count());
}

double best_fitness(const World& world) {
  double best = 0.0;
  for (const Agent& agent : world.agents) {
    best = std::max(best, agent.current_fitness);
  }
  return best;
}

double leader_action_share(const World& world) {
  if (!world.leader_id) {
    return 0.0;
  }
  const ActionVector& leader_action =
      world.agents[static_cast<std::size_t>(*world.leader_id)].current_action;
  int matching = 0;
  for (const Agent& agent : world.agents) {
    if (agent.current_action == leader_action) {
      ++matching;
    }
  }
  return static_cast<double>(matching) / static_cast<double>(world.n_agents());
}

IterationStats collect(const World& world) {
  IterationStats stats;
  stats.iteration = world.iteration;
  stats.mean_fitness = mean_fitness(world);
  stats.diversity = diversity(world);
  stats.best_fitness = best_fitness(world);
  stats.leader_action_share = leader_action_share(world);
  return stats;
}

}  // namespace culturesim
