#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "costly/cost_parity.hpp"
#include "costly/lasso.hpp"
#include "costly/streett.hpp"

namespace costly {

struct VerifyResult {
  bool ok = false;
  std::string reason;
  std::optional<Lasso> counterexample;  // in the coordinates of the checked game

  static VerifyResult accept() { return {true, "", std::nullopt}; }
  static VerifyResult reject(std::string why, std::optional<Lasso> lasso = std::nullopt) {
    return {false, std::move(why), std::move(lasso)};
  }
};

/// Certifies a positional strategy for the classical parity game: the claimed
/// region must be closed under the restricted moves (the condition is
/// prefix-independent) and no reachable cycle in the restricted graph may
/// have a hostile maximal color. Rejections carry a losing lasso.
VerifyResult verify_parity_strategy(const Arena& arena, const ParityColoring& coloring,
                                    const PositionalStrategy& strategy,
                                    const std::vector<int>& region);

/// Certifies strategies for the bounded cost games (parity and Streett):
/// builds the strategy-restricted product over the subdivided arena with the
/// reduction memory (plus the strategy's own memory) and runs the cycle
/// analysis of the derived omega-regular game from the claimed region's
/// initial states.
VerifyResult verify_bounded_strategy(const Game& game, const Strategy& strategy,
                                     const std::vector<int>& region, int player);

/// Certifies strategies for the classical games, dispatching on the game
/// kind; positional and finite-state strategies are both accepted.
VerifyResult verify_classical_strategy(const Game& game, const Strategy& strategy,
                                       const std::vector<int>& region, int player);

/// Same as verify_bounded_strategy for strategies declared over the
/// subdivided arena (the Streett pipelines' Player-0 strategies); the region
/// is then in subdivided coordinates.
VerifyResult verify_bounded_strategy_on_subdivision(const Game& game, const Strategy& strategy,
                                                    const std::vector<int>& region, int player);

/// Replays the fixpoint argument: every layer's bounded strategy wins its
/// subgame from x, attractor moves decrease rank, Player 1 leaves a layer
/// only toward earlier ones and Player 0 never leaves the current layer.
VerifyResult verify_layered_certificate(const Game& game, const LayeredCertificate& certificate,
                                        const std::vector<int>& region0);

/// Single entry point used by the CLI.
VerifyResult verify_strategy(const Game& game, const Strategy& strategy,
                             const std::vector<int>& region, int player);

std::int64_t default_state_budget();  // COSTLY_GAMES_BUDGET override, else 10^6

/// Exhaustive parity oracle: enumerates Player-0 positional strategies
/// (product of out-degrees bounded by the budget) and accepts a vertex iff
/// some strategy wins from it.
std::vector<int> parity_oracle_enumerate(const Arena& arena, const ParityColoring& coloring,
                                         std::int64_t budget = 0);

/// Oracle packaged as a full backend: uniform strategies found by
/// enumeration for both players.
ParitySolution parity_oracle_solve(const Arena& arena, const ParityColoring& coloring,
                                   std::int64_t budget = 0);
ParityBackend enumeration_backend(std::int64_t budget = 0);

struct StreettRegions {
  std::vector<int> region0;
  std::vector<int> region1;
};

/// Exhaustive classical Streett oracle over Player-1 positional strategies:
/// a vertex is winning for Player 1 iff some strategy leaves no reachable
/// cycle that satisfies every pair.
StreettRegions streett_oracle_enumerate(const Arena& arena, const StreettSpec& spec,
                                        std::int64_t budget = 0);

/// True iff no positional strategy of `player` wins the game from `vertex`
/// (checked by solving every restriction; exhaustive, budget-guarded).
bool positional_strategies_insufficient(const Game& game, int player, int vertex,
                                        std::int64_t budget = 0);

}  // namespace costly
