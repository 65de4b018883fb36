#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "costly/condition.hpp"

namespace costly {

constexpr std::int64_t kInfiniteCost = std::numeric_limits<std::int64_t>::max();

/// Finite representation of the ultimately periodic play prefix.cycle^w.
struct Lasso {
  std::vector<int> prefix;  // may be empty
  std::vector<int> cycle;   // nonempty
};

/// Throws std::invalid_argument if consecutive vertices (including the
/// prefix-to-cycle junction and the cycle wrap) are not connected by edges.
void check_lasso(const Arena& arena, const Lasso& lasso);

/// Vertex at play position k (k may exceed one period).
int lasso_vertex(const Lasso& lasso, std::int64_t k);

/// Winner of the classical max-parity condition on the lasso.
int eval_parity_lasso(const Arena& arena, const ParityColoring& coloring, const Lasso& lasso);

/// Cost-of-response at position k: increment edges (dimension 0) from k to the
/// first answering position, kInfiniteCost if the request is never answered.
/// Requires k < |prefix| + 2|cycle|; values repeat periodically beyond.
std::int64_t eval_cor(const Game& game, const Lasso& lasso, std::int64_t k);

/// Streett cost-of-response of pair `pair` at position k, measured with that
/// pair's cost dimension.
std::int64_t eval_streett_cor(const Game& game, const Lasso& lasso, std::int64_t k, int pair);

/// Winner of the game's condition on the lasso under the chosen variant.
int eval_condition_lasso(const Game& game, const Lasso& lasso, Variant variant);

}  // namespace costly
