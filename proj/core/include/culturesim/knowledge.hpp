#ifndef CULTURESIM_KNOWLEDGE_HPP
#define CULTURESIM_KNOWLEDGE_HPP

#include <array>

#include "culturesim/action.hpp"

namespace culturesim {

// Per-agent running estimate of how effective each component value is.
// q[i][v+1] holds an exponential moving average of the fitness of observed
// actions whose component i carried value v. Starts all-zero.
struct KnowledgeTable {
  std::array<std::array<double, 3>, kComponents> q{};
  double alpha = 0.1;  // learning rate, in (0, 1]

  double estimate(int component, int value) const {
    return q[static_cast<std::size_t>(component)][static_cast<std::size_t>(value + 1)];
  }

  // Moves the touched cell of every component toward the observed fitness.
  void observe(const ActionVector& action, double observed_fitness) {
    for (int i = 0; i < kComponents; ++i) {
      double& cell = q[static_cast<std::size_t>(i)][static_cast<std::size_t>(action[i] + 1)];
      cell += alpha * (observed_fitness - cell);
    }
  }

  bool operator==(const KnowledgeTable&) const = default;
};

}  // namespace culturesim

#endif  // CULTURESIM_KNOWLEDGE_HPP
