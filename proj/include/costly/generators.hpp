#pragma once

#include <cstdint>

#include "costly/condition.hpp"
#include "costly/strategy.hpp"

namespace costly {

/// Lower-bound family for the bounded parity game with costs: a hub of color
/// 0 and one blade per odd color c in {1, 3, ..., 2d-1}; the blade enters at
/// a Player-1 vertex of color c-1 with a self-loop, continues through a
/// color-2d vertex and a color-c vertex back to the hub. Every edge is an
/// increment edge. Player 1 wins everywhere but needs d+1 memory states.
Game make_lower_bound_parity_game(int d);

/// Lower-bound family for the bounded Streett game with costs (2d pairs,
/// every edge an increment edge in every dimension): Player 0 picks one of
/// two request vertices per round, Player 1 later mirrors the picks to trap
/// an unanswered request; 2^d memory states suffice and are required.
Game make_lower_bound_streett_game(int d);

/// The explicit mirror strategy for the Streett lower-bound game: remembers
/// Player 0's d binary choices and mirrors them.
FiniteStateStrategy make_lower_bound_streett_strategy(const Game& game, int d);

struct RandomGameSpec {
  GameKind kind = GameKind::Parity;
  Variant variant = Variant::Classical;
  int vertices = 5;
  double density = 0.35;          // probability per ordered vertex pair
  int max_color = 3;              // parity
  int pairs = 1;                  // streett
  double increment_prob = 0.3;    // per cost dimension
  double membership_prob = 0.3;   // streett Q/P membership per vertex and pair
  std::uint64_t seed = 1;
};

/// Seed-deterministic generation; every vertex gets at least one outgoing
/// edge. Rejects infeasible specs (no vertices, or zero density with more
/// than one vertex).
Game generate_random_game(const RandomGameSpec& spec);

}  // namespace costly
