#pragma once

#include <memory>

#include "costly/cost_parity.hpp"
#include "costly/graph_ops.hpp"
#include "costly/parity.hpp"

namespace costly {

/// Memory over subsets of the pair indices: the requests raised but not yet
/// answered.
MemoryStructure build_open_request_memory(const Arena& arena, const StreettSpec& spec);

/// Open-request set encoded in an open-request memory state name.
std::uint32_t open_set_of_state(const MemoryStructure& memory, int state);

struct StreettSolution {
  std::vector<int> region0;
  std::vector<int> region1;
  FiniteStateStrategy strategy0;  // index-appearance-record memory
  PositionalStrategy strategy1;
  int record_states = 0;  // size of the record memory used by the reduction
};

/// Classical Streett game solver: index-appearance-record reduction to a
/// parity game, then a positional Player-1 strategy recovered by fixing one
/// choice at a time. `pair_cap` bounds the records' factorial growth;
/// exceeding it raises std::runtime_error.
StreettSolution solve_streett(const Arena& arena, const StreettSpec& spec,
                              const ParityBackend& backend = {}, int pair_cap = 6);

struct BoundedCostStreettSolution {
  std::vector<int> region0;  // original coordinates
  std::vector<int> region1;
  /// Player 0, over the *subdivided* arena (carried in `sub`): memory is the
  /// open-request set paired with the derived game's record state.
  FiniteStateStrategy strategy0;
  std::vector<int> region0_sub;  // strategy0's domain, subdivided coordinates
  std::vector<int> region1_sub;
  /// Player 1, over the original arena, open-request memory only.
  FiniteStateStrategy strategy1;

  Subdivision sub;
  MemoryStructure open_memory;  // over the subdivided arena
  Product product;
  StreettSpec derived;  // 2d pairs on the product
  StreettSolution product_solution;
};

/// Subdivide every dimension at once, build the open-request product, solve
/// the derived 2d-pair classical Streett game, and project back.
BoundedCostStreettSolution solve_bounded_cost_streett(const Game& game,
                                                      const ParityBackend& backend = {},
                                                      int pair_cap = 6);

struct CostStreettSolution {
  std::vector<int> region0;
  std::vector<int> region1;
  LayeredCertificate certificate;  // layers carry finite-state strategies
  std::vector<std::string> trace;
  int iterations = 0;
  /// Pooled memory sizes: per layer and the shared pool (max over layers),
  /// reported so the strategy size bound can be inspected.
  std::vector<int> layer_memory_sizes;
  int pooled_memory_size = 0;
};

CostStreettSolution solve_cost_streett(const Game& game, const ParityBackend& backend = {},
                                       int pair_cap = 6);

/// Standard max-parity encoding: one pair per used odd color c, requesting at
/// the color-c vertices and answered by every larger even color; cost labels
/// replicate the single dimension across all pairs.
Game encode_parity_as_streett(const Game& game);

}  // namespace costly
