#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "costly/arena.hpp"

namespace costly {

/// Max-parity coloring: the largest color occurring infinitely often decides
/// the winner (even favors Player 0).
struct ParityColoring {
  std::vector<int> color;

  int at(int v) const { return color[static_cast<std::size_t>(v)]; }
  int max_color() const;
  /// Smallest odd color strictly larger than every used color.
  int top_odd() const;
  /// Odd colors present in the image, ascending.
  std::vector<int> odd_colors() const;
};

/// True iff a visit of color `responder` answers a request of color `request`.
inline bool answers(int responder, int request) {
  return responder % 2 == 0 && responder >= request;
}

struct StreettSpec {
  int pair_count = 0;
  std::vector<std::uint32_t> request_mask;   // per vertex: pairs requested there
  std::vector<std::uint32_t> response_mask;  // per vertex: pairs answered there

  bool requests(int v, int pair) const {
    return (request_mask[static_cast<std::size_t>(v)] >> pair) & 1u;
  }
  bool responds(int v, int pair) const {
    return (response_mask[static_cast<std::size_t>(v)] >> pair) & 1u;
  }
  std::vector<int> request_set(int pair) const;
  std::vector<int> response_set(int pair) const;
};

enum class GameKind { Parity, Streett };
enum class Variant { Classical, Cost, BoundedCost };

const char* to_string(GameKind kind);
const char* to_string(Variant variant);

struct Game {
  Arena arena;
  GameKind kind = GameKind::Parity;
  Variant variant = Variant::Classical;
  ParityColoring coloring;  // meaningful for parity games
  StreettSpec streett;      // meaningful for Streett games
};

/// Arena violations plus condition/arena consistency (total coloring, pair
/// dimension matching the cost dimension, mask bounds).
std::vector<std::string> validate_game(const Game& game);

}  // namespace costly
