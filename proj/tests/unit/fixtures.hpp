#pragma once

#include <string>
#include <vector>

#include "costly/condition.hpp"
#include "costly/generators.hpp"

namespace costly::testing {

// Seven-vertex chain of Player-1 vertices with three increment self-loops;
// the running example for every cost-parity pipeline test.
inline Game sample_game(Variant variant = Variant::BoundedCost) {
  Game game;
  game.kind = GameKind::Parity;
  game.variant = variant;
  Arena& arena = game.arena;
  auto vertex = [&](const std::string& name, int color) {
    arena.add_vertex(name, 1);
    game.coloring.color.push_back(color);
  };
  vertex("a", 1);
  vertex("b", 0);
  vertex("c", 2);
  vertex("d", 1);
  vertex("e", 0);
  vertex("f", 1);
  vertex("g", 0);
  auto edge = [&](const std::string& from, const std::string& to, const char* cost) {
    arena.add_edge(arena.find_vertex(from), arena.find_vertex(to), cost);
  };
  edge("a", "b", "e");
  edge("b", "b", "i");
  edge("b", "c", "e");
  edge("c", "a", "e");
  edge("c", "d", "e");
  edge("d", "e", "e");
  edge("e", "e", "i");
  edge("e", "f", "e");
  edge("f", "g", "e");
  edge("g", "g", "i");
  return game;
}

inline std::vector<int> vertices(const Game& game, const std::vector<std::string>& names) {
  std::vector<int> ids;
  for (const std::string& name : names) ids.push_back(game.arena.find_vertex(name));
  return ids;
}

inline std::vector<std::string> names_of(const Game& game, const std::vector<int>& ids) {
  std::vector<std::string> names;
  for (int v : ids) names.push_back(game.arena.name(v));
  return names;
}

// Small seeded batch of random parity games for cross-check loops.
inline Game random_parity_game(unsigned seed, int vertices = 6, int max_color = 3,
                               Variant variant = Variant::Classical,
                               double increment_prob = 0.3) {
  RandomGameSpec spec;
  spec.kind = GameKind::Parity;
  spec.variant = variant;
  spec.vertices = vertices;
  spec.max_color = max_color;
  spec.density = 0.3;
  spec.increment_prob = increment_prob;
  spec.seed = seed;
  return generate_random_game(spec);
}

inline Game random_streett_game(unsigned seed, int vertices = 5, int pairs = 2,
                                Variant variant = Variant::Classical) {
  RandomGameSpec spec;
  spec.kind = GameKind::Streett;
  spec.variant = variant;
  spec.vertices = vertices;
  spec.pairs = pairs;
  spec.density = 0.35;
  spec.increment_prob = 0.3;
  spec.membership_prob = 0.3;
  spec.seed = seed;
  return generate_random_game(spec);
}

}  // namespace costly::testing
