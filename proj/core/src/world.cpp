#include "culturesim/world.hpp"

namespace culturesim {

World new_world(const RunConfig& config) {
  validate(config);

  World world;
  world.width = config.width;
  world.height = config.height;
  world.broadcast_enabled = config.broadcast_enabled;
  world.epsilon = config.epsilon;
  world.rng = Rng(config.seed);

  const int n = config.width * config.height;
  world.agents.resize(static_cast<std::size_t>(n));
  for (int id = 0; id < n; ++id) {
    Agent& agent = world.agents[static_cast<std::size_t>(id)];
    agent.id = id;
    agent.row = id / config.width;
    agent.col = id % config.width;
    agent.current_action = ActionVector::still();
    agent.current_fitness = fitness(agent.current_action);
    agent.p_invent = config.follower_p_invent;
    agent.r_change = config.follower_r_change;
    agent.knowledge.alpha = config.alpha;
  }

  if (config.broadcast_enabled) {
    const int leader = world.rng.index(n);
    world.leader_id = leader;
    Agent& chosen = world.agents[static_cast<std::size_t>(leader)];
    chosen.is_leader = true;
    chosen.p_invent = config.leader_p_invent;
    chosen.r_change = config.leader_r_change;
  }
  return world;
}

std::array<int, 4> neighbors(const World& world, int id) {
  const int w = world.width;
  const int h = world.height;
  const int row = id / w;
  const int col = id % w;
  const int north = ((row - 1 + h) % h) * w + col;
  const int south = ((row + 1) % h) * w + col;
  const int west = row * w + (col - 1 + w) % w;
  const int east = row * w + (col + 1) % w;
  return {north, south, west, east};
}

}  // namespace culturesim
