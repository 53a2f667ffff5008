#ifndef CULTURESIM_WORLD_HPP
#define CULTURESIM_WORLD_HPP

#include <array>
#include <optional>
#include <vector>

#include "culturesim/agent.hpp"
#include "culturesim/rng.hpp"
#include "culturesim/run_config.hpp"

namespace culturesim {

// Toroidal grid of agents, one per cell, ids assigned row-major.
struct World {
  int width = 0;
  int height = 0;
  std::vector<Agent> agents;
  bool broadcast_enabled = false;
  std::optional<int> leader_id;  // present iff broadcast_enabled
  int iteration = 0;
  double epsilon = 0.1;  // knowledge smoothing used by invention
  Rng rng;

  int n_agents() const { return static_cast<int>(agents.size()); }

  bool operator==(const World&) const = default;
};

// Builds the initial world: every agent standing still with blank knowledge
// and zero fitness. When broadcasting is enabled, one uniformly random agent
// (the first draw from the run's seeded stream) becomes the leader and gets
// the leader parameters; everyone else gets the follower parameters.
World new_world(const RunConfig& config);

// The four toroidal von Neumann neighbor ids, in north, south, west, east order.
std::array<int, 4> neighbors(const World& world, int id);

}  // namespace culturesim

#endif  // CULTURESIM_WORLD_HPP
