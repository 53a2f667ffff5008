#include "culturesim/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace culturesim {

Decision decide(const Agent& agent, Rng& rng) {
  return rng.unit_double() < agent.p_invent ? Decision::Invent : Decision::Imitate;
}

int change_count(double r_change) {
  return std::max(1, static_cast<int>(std::lround(r_change * kComponents)));
}

ActionVector invent(const Agent& agent, double epsilon, Rng& rng) {
  const int k = change_count(agent.r_change);

  // Pick k distinct components by partial Fisher-Yates, then process them in
  // ascending order so the draw sequence is well defined.
  std::array<int, kComponents> order{0, 1, 2, 3, 4, 5};
  for (int j = 0; j < k; ++j) {
    std::swap(order[j], order[j + rng.index(kComponents - j)]);
  }
  std::sort(order.begin(), order.begin() + k);

  ActionVector next = agent.current_action;
  for (int chosen = 0; chosen < k; ++chosen) {
    const int i = order[chosen];
    // The two ternary values other than the current one, ascending.
    std::array<int8_t, 2> alternatives{};
    int found = 0;
    for (int8_t value = -1; value <= 1; ++value) {
      if (value != agent.current_action[i]) {
        alternatives[found++] = value;
      }
    }
    const double w0 = agent.knowledge.estimate(i, alternatives[0]) + epsilon;
    const double w1 = agent.knowledge.estimate(i, alternatives[1]) + epsilon;
    next[i] = rng.unit_double() * (w0 + w1) < w0 ? alternatives[0] : alternatives[1];
  }
  return next;
}

std::vector<Candidate> candidate_pool(const World& world, int id) {
  const std::array<int, 4> around = neighbors(world, id);

  std::vector<Candidate> pool;
  pool.reserve(5);
  for (const int neighbor_id : around) {
    pool.push_back({neighbor_id, world.agents[static_cast<std::size_t>(neighbor_id)].current_action});
  }
  if (world.broadcast_enabled && world.leader_id && *world.leader_id != id) {
    const int leader = *world.leader_id;
    if (std::ranges::find(around, leader) == around.end()) {
      pool.push_back({leader, world.agents[static_cast<std::size_t>(leader)].current_action});
    }
  }
  return pool;
}

ActionVector imitate(const Agent& agent, std::span<const Candidate> pool) {
  const Candidate* best = nullptr;
  double best_fitness = agent.current_fitness;
  for (const Candidate& candidate : pool) {
    const double candidate_fitness = fitness(candidate.action);
    if (candidate_fitness < best_fitness) {
      continue;
    }
    if (candidate_fitness > best_fitness ||
        (best != nullptr && candidate.agent_id < best->agent_id)) {
      best = &candidate;
      best_fitness = candidate_fitness;
    }
  }
  return best != nullptr ? best->action : agent.current_action;
}

void update_knowledge(Agent& agent, std::span<const Observation> observations) {
  for (const Observation& observation : observations) {
    agent.knowledge.observe(observation.action, observation.observed_fitness);
  }
}

void step(World& world, StepTrace* trace) {
  const int n = world.n_agents();
  std::vector<ActionVector> next_actions(static_cast<std::size_t>(n));
  if (trace != nullptr) {
    trace->decisions.assign(static_cast<std::size_t>(n), Decision::Imitate);
  }

  std::vector<Observation> observations;
  observations.reserve(6);

  // Commits are deferred, so world.agents still holds the iteration-start
  // snapshot while the loop runs; only each agent's own knowledge mutates.
  for (int id = 0; id < n; ++id) {
    Agent& agent = world.agents[static_cast<std::size_t>(id)];
    const std::vector<Candidate> pool = candidate_pool(world, id);

    const Decision decision = decide(agent, world.rng);
    const ActionVector next = decision == Decision::Invent
                                  ? invent(agent, world.epsilon, world.rng)
                                  : imitate(agent, pool);
    if (trace != nullptr) {
      trace->decisions[static_cast<std::size_t>(id)] = decision;
    }

    observations.clear();
    for (const Candidate& candidate : pool) {
      observations.push_back({candidate.action, fitness(candidate.action)});
    }
    observations.push_back({next, fitness(next)});
    update_knowledge(agent, observations);

    next_actions[static_cast<std::size_t>(id)] = next;
  }

  for (int id = 0; id < n; ++id) {
    Agent& agent = world.agents[static_cast<std::size_t>(id)];
    agent.current_action = next_actions[static_cast<std::size_t>(id)];
    agent.current_fitness = fitness(agent.current_action);
  }
  ++world.iteration;
}

}  // namespace culturesim
