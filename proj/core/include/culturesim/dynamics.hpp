#ifndef CULTURESIM_DYNAMICS_HPP
#define CULTURESIM_DYNAMICS_HPP

#include <span>
#include <vector>

#include "culturesim/world.hpp"

namespace culturesim {

enum class Decision { Invent, Imitate };

// One action visible to an agent: a neighbor's or the broadcast leader's.
struct Candidate {
  int agent_id = 0;
  ActionVector action;
};

// An (action, fitness) pair fed into a knowledge update.
struct Observation {
  ActionVector action;
  double observed_fitness = 0.0;
};

// Optional per-iteration record of what each agent did, indexed by agent id.
// Filled by step() when requested; used by tests and analysis tooling.
struct StepTrace {
  std::vector<Decision> decisions;
};

// Invent with probability p_invent, otherwise imitate.
// Consumes exactly one draw from the stream.
Decision decide(const Agent& agent, Rng& rng);

// Number of components an invention changes: max(1, round(r_change * 6)).
int change_count(double r_change);

// Creates a new action differing from the agent's current one in exactly
// change_count(r_change) components. The changed components are picked
// uniformly at random; each one takes one of its two other ternary values,
// sampled with probability proportional to the agent's knowledge estimate
// plus epsilon. Does not mutate the agent.
ActionVector invent(const Agent& agent, double epsilon, Rng& rng);

// The actions an agent can imitate this iteration: its four neighbors',
// plus the leader's when broadcasting is on, the agent is not the leader
// itself, and the leader is not already one of the neighbors.
std::vector<Candidate> candidate_pool(const World& world, int id);

// Strict-improvement copy rule: adopt the highest-fitness candidate whose
// fitness strictly exceeds the agent's own; ties go to the lowest agent id.
// With no strictly better candidate the agent keeps its current action.
ActionVector imitate(const Agent& agent, std::span<const Candidate> pool);

// Folds the observations into the agent's knowledge table, in list order.
void update_knowledge(Agent& agent, std::span<const Observation> observations);

// Advances the world one iteration. All agents read the iteration-start
// snapshot of actions; each agent in id order decides, acquires an action
// (invent or imitate), and learns from its candidate pool plus its own new
// action; then every new action commits simultaneously. Random draws happen
// in agent id order, so a (config, seed) pair fixes the whole trajectory.
void step(World& world, StepTrace* trace = nullptr);

}  // namespace culturesim

#endif  // CULTURESIM_DYNAMICS_HPP
