#include "costly/condition.hpp"

#include <algorithm>

namespace costly {

int ParityColoring::max_color() const {
  int m = 0;
  for (int c : color) m = std::max(m, c);
  return m;
}

int ParityColoring::top_odd() const {
  int m = max_color();
  return m % 2 == 0 ? m + 1 : m + 2;
}

std::vector<int> ParityColoring::odd_colors() const {
  std::vector<int> odds;
  for (int c : color)
    if (c % 2 == 1 && std::find(odds.begin(), odds.end(), c) == odds.end()) odds.push_back(c);
  std::sort(odds.begin(), odds.end());
  return odds;
}

std::vector<int> StreettSpec::request_set(int pair) const {
  std::vector<int> set;
  for (std::size_t v = 0; v < request_mask.size(); ++v)
    if ((request_mask[v] >> pair) & 1u) set.push_back(static_cast<int>(v));
  return set;
}

std::vector<int> StreettSpec::response_set(int pair) const {
  std::vector<int> set;
  for (std::size_t v = 0; v < response_mask.size(); ++v)
    if ((response_mask[v] >> pair) & 1u) set.push_back(static_cast<int>(v));
  return set;
}

const char* to_string(GameKind kind) {
  return kind == GameKind::Parity ? "parity" : "streett";
}

const char* to_string(Variant variant) {
  switch (variant) {
    case Variant::Classical: return "classical";
    case Variant::Cost: return "cost";
    default: return "bounded-cost";
  }
}

std::vector<std::string> validate_game(const Game& game) {
  std::vector<std::string> violations = validate_arena(game.arena);
  const std::size_t n = static_cast<std::size_t>(game.arena.vertex_count());
  if (game.kind == GameKind::Parity) {
    if (game.coloring.color.size() != n)
      violations.push_back("coloring not total on vertices");
    else
      for (std::size_t v = 0; v < n; ++v)
        if (game.coloring.color[v] < 0)
          violations.push_back("vertex " + game.arena.name(static_cast<int>(v)) +
                               ": negative color");
    if (game.arena.cost_dimension != 1)
      violations.push_back("parity games use cost dimension 1");
  } else {
    if (game.streett.pair_count < 1)
      violations.push_back("streett game needs at least one pair");
    if (game.streett.pair_count > 31)
      violations.push_back("streett pair count exceeds 31");
    if (game.streett.request_mask.size() != n || game.streett.response_mask.size() != n)
      violations.push_back("pair membership not total on vertices");
    if (game.arena.cost_dimension != game.streett.pair_count)
      violations.push_back("cost dimension must equal the pair count");
  }
  return violations;
}

}  // namespace costly
