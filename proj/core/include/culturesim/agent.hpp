#ifndef CULTURESIM_AGENT_HPP
#define CULTURESIM_AGENT_HPP

#include "culturesim/action.hpp"
#include "culturesim/knowledge.hpp"

namespace culturesim {

struct Agent {
  int id = 0;
  int row = 0;
  int col = 0;
  ActionVector current_action;
  double current_fitness = 0.0;  // cached fitness(current_action)
  double p_invent = 0.0;         // per-iteration probability of inventing, in [0, 1]
  double r_change = 1.0;         // fraction of components changed per invention, in (0, 1]
  KnowledgeTable knowledge;
  bool is_leader = false;

  bool operator==(const Agent&) const = default;
};

}  // namespace culturesim

#endif  // CULTURESIM_AGENT_HPP
