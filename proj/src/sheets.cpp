#include "costly/sheets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "costly/graph_ops.hpp"
#include "costly/verify.hpp"

namespace costly {

std::strong_ordering operator<=>(const Sheet& a, const Sheet& b) {
  if (a.kind != b.kind) return a.kind <=> b.kind;
  return a.x <=> b.x;
}

SheetIncrement sheet_increment(const SheetSpace& space, const Sheet& sheet, int k) {
  if (sheet.kind != Sheet::kProper)
    throw std::invalid_argument("sheet_increment: only proper sheets can be incremented");
  if (k < 1 || k > space.coord_count())
    throw std::invalid_argument("sheet_increment: coordinate out of range");

  int target = -1;  // largest coordinate <= k that is not full
  for (int j = k; j >= 1; --j)
    if (!space.full(j, sheet.x[static_cast<std::size_t>(j - 1)])) {
      target = j;
      break;
    }

  SheetIncrement result;
  if (target < 0) {
    result.sheet = Sheet::top();
    result.overflow_lo = 1;
    result.overflow_hi = k;
    return result;
  }
  result.sheet = sheet;
  if (target == 1) {
    result.sheet.x[0] += 2;
    std::fill(result.sheet.x.begin() + 1, result.sheet.x.end(), 0);
    if (k > 1) {
      result.overflow_lo = 2;
      result.overflow_hi = k;
    }
  } else {
    result.sheet.x[static_cast<std::size_t>(target - 1)] += 1;
    std::fill(result.sheet.x.begin() + target, result.sheet.x.end(), 0);
    if (target < k) {
      result.overflow_lo = target + 1;
      result.overflow_hi = k;
    }
  }
  return result;
}

Sheet initial_sheet(const SheetSpace& space, int color) {
  if (color % 2 == 0) return Sheet::bottom();
  Sheet sheet;
  sheet.kind = Sheet::kProper;
  sheet.x.assign(static_cast<std::size_t>(space.coord_count()), 0);
  sheet.x[0] = color;
  return sheet;
}

Sheet sheet_step(const SheetSpace& space, const Sheet& sheet, bool increment_edge,
                 int next_color) {
  if (sheet.kind == Sheet::kTop) return sheet;
  if (sheet.kind == Sheet::kBottom) return initial_sheet(space, next_color);
  const int open = sheet.x[0];
  // A color above the open request restarts the sheet, regardless of the
  // edge's cost.
  if (next_color > open) return initial_sheet(space, next_color);
  if (increment_edge) return sheet_increment(space, sheet, 2).sheet;
  if (next_color % 2 == 0) {
    // Scores of the answered colors (those below next_color) are cleared.
    Sheet result = sheet;
    for (int c = 1; c < next_color; c += 2)
      result.x[static_cast<std::size_t>(space.coordinate_of_color(c) - 1)] = 0;
    return result;
  }
  return sheet_increment(space, sheet, space.coordinate_of_color(next_color)).sheet;
}

Sheet sheet_of_prefix(const SheetSpace& space, const Game& game, const std::vector<int>& prefix) {
  if (prefix.empty()) throw std::invalid_argument("sheet_of_prefix: empty prefix");
  Sheet sheet = initial_sheet(space, game.coloring.at(prefix.front()));
  for (std::size_t i = 1; i < prefix.size(); ++i) {
    int e = game.arena.edge_between(prefix[i - 1], prefix[i]);
    if (e < 0) throw std::invalid_argument("sheet_of_prefix: not a play");
    sheet = sheet_step(space, sheet, is_increment(game.arena.edges[static_cast<std::size_t>(e)].cost, 0),
                       game.coloring.at(prefix[i]));
  }
  return sheet;
}

SheetSpace sheet_space_for(const Game& game, int memory_size) {
  SheetSpace space;
  int m = game.coloring.max_color();
  space.top_color = m % 2 == 1 ? m : m + 1;
  space.cap = subdivide(game).game.arena.vertex_count() * std::max(1, memory_size);
  return space;
}

PositionalStrategy positionalize(const Game& game, const FiniteStateStrategy& sigma,
                                 const std::vector<int>& winning_from,
                                 std::int64_t state_budget) {
  if (game.kind != GameKind::Parity)
    throw std::invalid_argument("positionalize: parity games only");
  if (sigma.player != 0) throw std::invalid_argument("positionalize: Player 0 strategies only");
  if (state_budget <= 0) state_budget = default_state_budget();

  VerifyResult pre = verify_bounded_strategy(game, sigma, winning_from, 0);
  if (!pre.ok)
    throw std::runtime_error("positionalize: input strategy failed verification: " + pre.reason);

  const SheetSpace space = sheet_space_for(game, sigma.memory.state_count());
  const Arena& arena = game.arena;

  // Reachable (vertex, memory, sheet) triples; Player 1 branches universally,
  // Player 0 follows the strategy.
  using Key = std::tuple<int, int, Sheet>;
  std::map<Key, char> seen;
  std::vector<Key> frontier;
  for (int v : winning_from) {
    Key key{v, sigma.memory.init[static_cast<std::size_t>(v)],
            initial_sheet(space, game.coloring.at(v))};
    if (seen.emplace(key, 1).second) frontier.push_back(key);
  }
  std::int64_t explored = 0;
  while (!frontier.empty()) {
    auto [v, m, sheet] = frontier.back();
    frontier.pop_back();
    if (++explored > state_budget)
      throw std::runtime_error("positionalize: state budget exceeded");
    if (sheet.kind == Sheet::kTop)
      throw std::runtime_error("positionalize: strategy not winning (top sheet reached)");
    std::vector<int> moves;
    if (arena.owner[static_cast<std::size_t>(v)] == 0) {
      int move = sigma.at(v, m);
      if (move < 0) throw std::runtime_error("positionalize: strategy undefined at reached state");
      moves.push_back(move);
    } else {
      moves = arena.successors(v);
    }
    for (int w : moves) {
      int e = arena.edge_between(v, w);
      Sheet next = sheet_step(space, sheet,
                              is_increment(arena.edges[static_cast<std::size_t>(e)].cost, 0),
                              game.coloring.at(w));
      if (next.kind == Sheet::kTop)
        throw std::runtime_error("positionalize: strategy not winning (top sheet reached)");
      Key key{w, sigma.memory.run(m, w), next};
      if (seen.emplace(key, 1).second) frontier.push_back(key);
    }
  }

  // For every vertex pick the reachable triple with the maximal sheet, ties
  // to the smallest memory state, and adopt its move.
  std::map<int, std::pair<Sheet, int>> best;  // vertex -> (sheet, memory)
  for (const auto& [key, unused] : seen) {
    (void)unused;
    const auto& [v, m, sheet] = key;
    auto it = best.find(v);
    if (it == best.end() || sheet > it->second.first)
      best[v] = {sheet, m};
  }

  PositionalStrategy result;
  result.player = 0;
  result.next.assign(static_cast<std::size_t>(arena.vertex_count()), -1);
  for (const auto& [v, pick] : best) {
    if (arena.owner[static_cast<std::size_t>(v)] != 0) continue;
    result.next[static_cast<std::size_t>(v)] = sigma.at(v, pick.second);
  }

  VerifyResult post = verify_bounded_strategy(game, result, winning_from, 0);
  if (!post.ok)
    throw std::logic_error("positionalize: extracted strategy failed verification: " + post.reason);
  return result;
}

}  // namespace costly
