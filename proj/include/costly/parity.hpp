#pragma once

#include <functional>

#include "costly/condition.hpp"
#include "costly/strategy.hpp"

namespace costly {

struct ParitySolution {
  std::vector<int> winner;  // per vertex
  PositionalStrategy strategy0;
  PositionalStrategy strategy1;

  std::vector<int> region(int player) const;
  const PositionalStrategy& strategy(int player) const {
    return player == 0 ? strategy0 : strategy1;
  }
};

/// Recursive attractor decomposition. Deterministic: ties break toward the
/// smallest-indexed successor. Both returned strategies are uniform
/// positional winning strategies on their regions.
ParitySolution solve_parity(const Arena& arena, const ParityColoring& coloring);

/// Injectable backend so the cost pipelines can run against an independent
/// parity solver.
using ParityBackend = std::function<ParitySolution(const Arena&, const ParityColoring&)>;

ParityBackend default_parity_backend();

}  // namespace costly
