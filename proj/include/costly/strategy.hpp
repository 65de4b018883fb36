#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "costly/arena.hpp"

namespace costly {

/// Finite memory with per-vertex initialization and a total update map.
struct MemoryStructure {
  std::vector<std::string> state_names;
  std::vector<int> init;                 // vertex -> state
  std::vector<std::vector<int>> update;  // [state][vertex] -> state

  int state_count() const { return static_cast<int>(state_names.size()); }
  int run(int state, int vertex) const {
    return update[static_cast<std::size_t>(state)][static_cast<std::size_t>(vertex)];
  }
  /// Upd+ over a nonempty vertex sequence.
  int run_word(const std::vector<int>& word) const;
};

struct PositionalStrategy {
  int player = 0;
  std::vector<int> next;  // vertex -> chosen successor, -1 where undefined

  int at(int v) const { return next[static_cast<std::size_t>(v)]; }
  bool defined(int v) const { return at(v) >= 0; }
};

struct FiniteStateStrategy {
  int player = 0;
  MemoryStructure memory;
  std::vector<std::vector<int>> next_move;  // [vertex][state] -> successor, -1 undefined

  int at(int v, int m) const {
    return next_move[static_cast<std::size_t>(v)][static_cast<std::size_t>(m)];
  }
};

/// Marker for the cost variants where Player 1 has no finite-state winning
/// strategy; the spoiler driver realizes the infinite-memory one.
struct InfiniteMemoryStrategy {
  std::string note;
};

/// One layer of the fixpoint iteration: the bounded-game winning set x of the
/// layer's subgame, its Player-0 attractor, attractor ranks, and the
/// strategies witnessing both. All vertex ids are in original-game
/// coordinates; ranks are -1 outside the attractor and 0 exactly on x.
struct CertificateLayer {
  std::vector<int> x;
  std::vector<int> attr;
  std::vector<int> rank;
  PositionalStrategy bounded;                     // on x (parity pipelines)
  std::optional<FiniteStateStrategy> bounded_fs;  // on x (Streett pipelines, over the layer's subdivided subgame)
  PositionalStrategy attractor_moves;             // on attr minus x
};

struct LayeredCertificate {
  int player = 0;  // always 0
  std::vector<CertificateLayer> layers;

  /// The layers are vertex-disjoint, so the positional parts flatten into a
  /// single map.
  PositionalStrategy flatten(int vertex_count) const;
};

using Strategy =
    std::variant<PositionalStrategy, FiniteStateStrategy, InfiniteMemoryStrategy, LayeredCertificate>;

struct GameSolution {
  std::vector<int> region0;
  std::vector<int> region1;
  Strategy strategy0;
  Strategy strategy1;
};

}  // namespace costly
