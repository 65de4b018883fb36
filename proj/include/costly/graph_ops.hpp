#pragma once

#include <vector>

#include "costly/condition.hpp"
#include "costly/strategy.hpp"

namespace costly {

struct AttractorResult {
  std::vector<char> in_set;
  std::vector<int> set;   // sorted
  std::vector<int> rank;  // construction step, -1 outside, 0 on the target
  PositionalStrategy strategy;  // attracting player's moves on set minus target
};

/// Least fixpoint of the inductive attractor construction for `player`
/// towards `target`, restricted to the vertices flagged alive (empty mask =
/// whole arena). Strategy edges decrease rank.
AttractorResult attractor(const Arena& arena, int player, const std::vector<int>& target,
                          const std::vector<char>& alive = {});

/// True iff `player` cannot leave xs: successors of xs-vertices owned by
/// `player` stay in xs and every other xs-vertex keeps a successor in xs.
bool is_trap(const Arena& arena, int player, const std::vector<int>& xs);

struct Subgame {
  Game game;
  std::vector<int> origin;  // subgame vertex -> parent vertex
};

/// Induced subgame on the complement of `removed`. Rejects with
/// std::invalid_argument if a vertex would lose all outgoing edges.
Subgame remove_region(const Game& game, const std::vector<int>& removed);

struct Subdivision {
  Game game;
  std::vector<int> origin_vertex;  // new vertex -> original vertex, -1 for added ones
  std::vector<int> sub_of_edge;    // original edge -> added vertex, -1 if kept
  std::vector<int> edge_of_sub;    // new vertex -> original edge, -1 for originals
};

/// Splits every edge with a non-all-epsilon label through a fresh Player-1
/// vertex carrying the target's color and empty Streett membership; the first
/// half keeps the label, the second half is free. Original vertices keep
/// their indices. Afterwards no vertex mixes incoming increment and epsilon
/// edges in any dimension.
Subdivision subdivide(const Game& game);

struct Product {
  Arena arena;
  std::vector<std::pair<int, int>> vm;  // product vertex -> (base vertex, state)
  std::vector<std::vector<int>> at;     // [base vertex][state] -> product vertex, -1 unused
};

/// Expanded arena of base x memory. With full = false only the part reachable
/// from {(v, Init(v))} is kept; with full = true every (v, m) pair becomes a
/// vertex. Owners and edge labels are inherited from the base edge.
Product build_product(const Arena& base, const MemoryStructure& memory, bool full);

/// Extended lasso of `base` in the product: follows the memory through the
/// prefix and repeats the cycle until the memory state recurs at the cycle
/// head.
struct Lasso;
Lasso extend_lasso(const Product& product, const MemoryStructure& memory, const Lasso& base);

/// Successor graph of the arena with the moves of `strategy.player` replaced
/// by the strategy's choice. Vertices where the strategy is undefined keep no
/// successors; the caller decides whether reaching one is an error.
std::vector<std::vector<int>> restrict_by_strategy(const Arena& arena,
                                                   const PositionalStrategy& strategy);

/// Per start vertex: can it reach a cycle whose maximal color has the given
/// parity (0 = even, 1 = odd)? Detected per color c of that parity as a
/// nontrivial strongly connected component of the subgraph of colors <= c
/// containing a color-c vertex.
std::vector<char> cycle_parity_reachable(const std::vector<std::vector<int>>& succ,
                                         const std::vector<int>& color, int parity);

struct CycleWitness {
  std::vector<int> path;   // from the requested start to the cycle entry
  std::vector<int> cycle;  // cycle through the anchor vertex
};

/// Witness for cycle_parity_reachable from `start`; empty optional if none.
std::optional<CycleWitness> find_parity_cycle(const std::vector<std::vector<int>>& succ,
                                              const std::vector<int>& color, int parity,
                                              int start);

/// Nontrivial strongly connected components (an SCC with an internal edge),
/// listed in a deterministic order, vertices sorted.
std::vector<std::vector<int>> nontrivial_sccs(const std::vector<std::vector<int>>& succ,
                                              const std::vector<char>& alive);

}  // namespace costly
