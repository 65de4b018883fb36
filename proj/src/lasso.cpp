#include "costly/lasso.hpp"

#include <algorithm>
#include <stdexcept>

namespace costly {

namespace {

std::int64_t period_start(const Lasso& lasso) {
  return static_cast<std::int64_t>(lasso.prefix.size());
}

std::int64_t lasso_length_bound(const Lasso& lasso) {
  return static_cast<std::int64_t>(lasso.prefix.size()) +
         2 * static_cast<std::int64_t>(lasso.cycle.size());
}

// Edge taken from position k to k+1.
int edge_at(const Arena& arena, const Lasso& lasso, std::int64_t k) {
  int e = arena.edge_between(lasso_vertex(lasso, k), lasso_vertex(lasso, k + 1));
  if (e < 0) throw std::invalid_argument("lasso uses a nonexistent edge");
  return e;
}

bool cycle_has_increment(const Arena& arena, const Lasso& lasso, int dim) {
  const std::int64_t start = period_start(lasso);
  for (std::int64_t k = start; k < start + static_cast<std::int64_t>(lasso.cycle.size()); ++k)
    if (is_increment(arena.edges[static_cast<std::size_t>(edge_at(arena, lasso, k))].cost, dim))
      return true;
  return false;
}

// Scans forward from k for the first position satisfying `answered`,
// accumulating increments of `dim`. All answers, if any, show up within one
// extra period past the scanned range.
template <typename Pred>
std::int64_t cost_to_first(const Arena& arena, const Lasso& lasso, std::int64_t k, int dim,
                           Pred answered) {
  const std::int64_t limit =
      std::max(k, period_start(lasso)) + static_cast<std::int64_t>(lasso.cycle.size());
  std::int64_t cost = 0;
  for (std::int64_t pos = k; pos <= limit; ++pos) {
    if (answered(lasso_vertex(lasso, pos))) return cost;
    int e = edge_at(arena, lasso, pos);
    if (is_increment(arena.edges[static_cast<std::size_t>(e)].cost, dim)) ++cost;
  }
  return kInfiniteCost;
}

int eval_parity(const Game& game, const Lasso& lasso, Variant variant) {
  // The classical and cost readings agree on ultimately periodic plays: the
  // maximal cycle color decides, and answers within the cycle have
  // periodically repeating, hence bounded, cost.
  int max_cycle = 0;
  for (int v : lasso.cycle) max_cycle = std::max(max_cycle, game.coloring.at(v));
  int winner = max_cycle % 2 == 0 ? 0 : 1;
  if (variant != Variant::BoundedCost || winner == 1) return winner;
  // Bounded variant additionally rejects any request that is never answered
  // while increments keep accruing.
  if (!cycle_has_increment(game.arena, lasso, 0)) return 0;
  const std::int64_t one_period = period_start(lasso) + static_cast<std::int64_t>(lasso.cycle.size());
  for (std::int64_t k = 0; k < one_period; ++k) {
    int c = game.coloring.at(lasso_vertex(lasso, k));
    if (c % 2 == 0) continue;
    if (eval_cor(game, lasso, k) == kInfiniteCost) return 1;
  }
  return 0;
}

int eval_streett(const Game& game, const Lasso& lasso, Variant variant) {
  const StreettSpec& spec = game.streett;
  std::uint32_t cycle_requests = 0;
  std::uint32_t cycle_responses = 0;
  for (int v : lasso.cycle) {
    cycle_requests |= spec.request_mask[static_cast<std::size_t>(v)];
    cycle_responses |= spec.response_mask[static_cast<std::size_t>(v)];
  }
  if ((cycle_requests & ~cycle_responses) != 0) return 1;
  if (variant != Variant::BoundedCost) return 0;
  const std::int64_t one_period = period_start(lasso) + static_cast<std::int64_t>(lasso.cycle.size());
  for (int pair = 0; pair < spec.pair_count; ++pair) {
    if (!cycle_has_increment(game.arena, lasso, pair)) continue;
    for (std::int64_t k = 0; k < one_period; ++k) {
      if (!spec.requests(lasso_vertex(lasso, k), pair)) continue;
      if (eval_streett_cor(game, lasso, k, pair) == kInfiniteCost) return 1;
    }
  }
  return 0;
}

}  // namespace

void check_lasso(const Arena& arena, const Lasso& lasso) {
  if (lasso.cycle.empty()) throw std::invalid_argument("lasso needs a nonempty cycle");
  auto check_vertex = [&](int v) {
    if (v < 0 || v >= arena.vertex_count())
      throw std::invalid_argument("lasso vertex out of range");
  };
  for (int v : lasso.prefix) check_vertex(v);
  for (int v : lasso.cycle) check_vertex(v);
  auto check_edge = [&](int u, int v) {
    if (arena.edge_between(u, v) < 0)
      throw std::invalid_argument("lasso uses a nonexistent edge " + arena.name(u) + " -> " +
                                  arena.name(v));
  };
  for (std::size_t i = 0; i + 1 < lasso.prefix.size(); ++i)
    check_edge(lasso.prefix[i], lasso.prefix[i + 1]);
  if (!lasso.prefix.empty()) check_edge(lasso.prefix.back(), lasso.cycle.front());
  for (std::size_t i = 0; i + 1 < lasso.cycle.size(); ++i)
    check_edge(lasso.cycle[i], lasso.cycle[i + 1]);
  check_edge(lasso.cycle.back(), lasso.cycle.front());
}

int lasso_vertex(const Lasso& lasso, std::int64_t k) {
  const std::int64_t p = static_cast<std::int64_t>(lasso.prefix.size());
  if (k < p) return lasso.prefix[static_cast<std::size_t>(k)];
  return lasso.cycle[static_cast<std::size_t>((k - p) % static_cast<std::int64_t>(lasso.cycle.size()))];
}

int eval_parity_lasso(const Arena& arena, const ParityColoring& coloring, const Lasso& lasso) {
  check_lasso(arena, lasso);
  int max_cycle = 0;
  for (int v : lasso.cycle) max_cycle = std::max(max_cycle, coloring.at(v));
  return max_cycle % 2 == 0 ? 0 : 1;
}

std::int64_t eval_cor(const Game& game, const Lasso& lasso, std::int64_t k) {
  if (k < 0 || k >= lasso_length_bound(lasso))
    throw std::out_of_range("eval_cor: position outside prefix + two periods");
  int request = game.coloring.at(lasso_vertex(lasso, k));
  return cost_to_first(game.arena, lasso, k, 0,
                       [&](int v) { return answers(game.coloring.at(v), request); });
}

std::int64_t eval_streett_cor(const Game& game, const Lasso& lasso, std::int64_t k, int pair) {
  if (k < 0 || k >= lasso_length_bound(lasso))
    throw std::out_of_range("eval_streett_cor: position outside prefix + two periods");
  if (!game.streett.requests(lasso_vertex(lasso, k), pair)) return 0;
  return cost_to_first(game.arena, lasso, k, pair,
                       [&](int v) { return game.streett.responds(v, pair); });
}

int eval_condition_lasso(const Game& game, const Lasso& lasso, Variant variant) {
  check_lasso(game.arena, lasso);
  return game.kind == GameKind::Parity ? eval_parity(game, lasso, variant)
                                       : eval_streett(game, lasso, variant);
}

}  // namespace costly
