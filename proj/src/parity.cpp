#include "costly/parity.hpp"

#include <algorithm>
#include <stdexcept>

#include "costly/graph_ops.hpp"

namespace costly {

std::vector<int> ParitySolution::region(int player) const {
  std::vector<int> result;
  for (std::size_t v = 0; v < winner.size(); ++v)
    if (winner[v] == player) result.push_back(static_cast<int>(v));
  return result;
}

namespace {

struct Solver {
  const Arena& arena;
  const std::vector<int>& color;
  std::vector<int> winner;
  PositionalStrategy s0, s1;

  explicit Solver(const Arena& a, const std::vector<int>& c) : arena(a), color(c) {
    winner.assign(static_cast<std::size_t>(a.vertex_count()), -1);
    s0.player = 0;
    s1.player = 1;
    s0.next.assign(winner.size(), -1);
    s1.next.assign(winner.size(), -1);
  }

  PositionalStrategy& strat(int player) { return player == 0 ? s0 : s1; }

  int first_alive_successor(int v, const std::vector<char>& alive) const {
    for (int w : arena.successors(v))
      if (alive[static_cast<std::size_t>(w)]) return w;
    throw std::logic_error("solve_parity: terminal vertex in subgame");
  }

  void solve(const std::vector<char>& alive, int alive_count) {
    if (alive_count == 0) return;
    int top = -1;
    for (std::size_t v = 0; v < alive.size(); ++v)
      if (alive[v]) top = std::max(top, color[v]);
    const int p = top % 2 == 0 ? 0 : 1;

    std::vector<int> tops;
    for (std::size_t v = 0; v < alive.size(); ++v)
      if (alive[v] && color[v] == top) tops.push_back(static_cast<int>(v));

    AttractorResult a = attractor(arena, p, tops, alive);
    std::vector<char> rest = alive;
    int rest_count = alive_count;
    for (int v : a.set) {
      rest[static_cast<std::size_t>(v)] = 0;
      --rest_count;
    }
    solve(rest, rest_count);

    std::vector<int> opp_win;
    for (std::size_t v = 0; v < rest.size(); ++v)
      if (rest[v] && winner[v] == 1 - p) opp_win.push_back(static_cast<int>(v));

    if (opp_win.empty()) {
      for (std::size_t v = 0; v < alive.size(); ++v)
        if (alive[v]) winner[v] = p;
      for (int v : a.set) {
        if (arena.owner[static_cast<std::size_t>(v)] != p) continue;
        if (color[static_cast<std::size_t>(v)] == top)
          strat(p).next[static_cast<std::size_t>(v)] = first_alive_successor(v, alive);
        else
          strat(p).next[static_cast<std::size_t>(v)] = a.strategy.at(v);
      }
      return;
    }

    AttractorResult b = attractor(arena, 1 - p, opp_win, alive);
    for (int v : b.set) {
      winner[static_cast<std::size_t>(v)] = 1 - p;
      // Keep the sub-solution's moves on the winning core; attract elsewhere.
      if (arena.owner[static_cast<std::size_t>(v)] == 1 - p && b.rank[static_cast<std::size_t>(v)] > 0)
        strat(1 - p).next[static_cast<std::size_t>(v)] = b.strategy.at(v);
    }
    std::vector<char> remaining = alive;
    int remaining_count = alive_count;
    for (int v : b.set) {
      remaining[static_cast<std::size_t>(v)] = 0;
      --remaining_count;
    }
    solve(remaining, remaining_count);
  }
};

}  // namespace

ParitySolution solve_parity(const Arena& arena, const ParityColoring& coloring) {
  if (coloring.color.size() != static_cast<std::size_t>(arena.vertex_count()))
    throw std::invalid_argument("solve_parity: coloring not total");
  Solver solver(arena, coloring.color);
  std::vector<char> alive(static_cast<std::size_t>(arena.vertex_count()), 1);
  solver.solve(alive, arena.vertex_count());
  ParitySolution solution;
  solution.winner = std::move(solver.winner);
  solution.strategy0 = std::move(solver.s0);
  solution.strategy1 = std::move(solver.s1);
  // Strategy entries are only meaningful on the owner's winning region.
  for (std::size_t v = 0; v < solution.winner.size(); ++v) {
    if (solution.winner[v] != 0) solution.strategy0.next[v] = -1;
    if (solution.winner[v] != 1) solution.strategy1.next[v] = -1;
  }
  return solution;
}

ParityBackend default_parity_backend() {
  return [](const Arena& arena, const ParityColoring& coloring) {
    return solve_parity(arena, coloring);
  };
}

}  // namespace costly
