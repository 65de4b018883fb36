#include "costly/cost_parity.hpp"

#include <algorithm>
#include <stdexcept>

namespace costly {

int RequestMemory::state_of_color(int color) const {
  for (std::size_t s = 0; s < state_color.size(); ++s)
    if (state_color[s] == color) return static_cast<int>(s);
  throw std::invalid_argument("request memory: unknown request color");
}

RequestMemory build_request_memory(const Arena& arena, const ParityColoring& coloring) {
  RequestMemory memory;
  memory.state_color.push_back(-1);
  memory.structure.state_names.push_back("bot");
  for (int c : coloring.odd_colors()) {
    memory.state_color.push_back(c);
    memory.structure.state_names.push_back(std::to_string(c));
  }
  const int n = arena.vertex_count();
  const int m = memory.structure.state_count();
  memory.structure.init.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    if (coloring.at(v) % 2 == 1)
      memory.structure.init[static_cast<std::size_t>(v)] = memory.state_of_color(coloring.at(v));
  memory.structure.update.assign(static_cast<std::size_t>(m),
                                 std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int s = 0; s < m; ++s) {
    for (int v = 0; v < n; ++v) {
      int c = memory.state_color[static_cast<std::size_t>(s)];
      int cv = coloring.at(v);
      int next;
      if (c < 0) {
        next = memory.structure.init[static_cast<std::size_t>(v)];
      } else if (cv % 2 == 1) {
        next = memory.state_of_color(std::max(cv, c));
      } else if (answers(cv, c)) {
        next = memory.none_state;
      } else {
        next = s;
      }
      memory.structure.update[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] = next;
    }
  }
  return memory;
}

std::vector<int> pcrr_coloring(const Product& product, const ParityColoring& base,
                               const std::vector<char>& increment_vertex,
                               const RequestMemory& memory, int top_odd) {
  std::vector<int> color(static_cast<std::size_t>(product.arena.vertex_count()), 0);
  for (int q = 0; q < product.arena.vertex_count(); ++q) {
    auto [v, m] = product.vm[static_cast<std::size_t>(q)];
    if (m == memory.none_state)
      color[static_cast<std::size_t>(q)] = top_odd + 1;
    else if (increment_vertex[static_cast<std::size_t>(v)])
      color[static_cast<std::size_t>(q)] = top_odd;
    else
      color[static_cast<std::size_t>(q)] = base.at(v);
  }
  return color;
}

namespace {

// Target of a subdivided vertex in original coordinates.
int project_vertex(const Subdivision& sub, int v) {
  if (sub.origin_vertex[static_cast<std::size_t>(v)] >= 0)
    return sub.origin_vertex[static_cast<std::size_t>(v)];
  int e = sub.edge_of_sub[static_cast<std::size_t>(v)];
  return -1 - e;  // marker: inside an original edge
}

// An original move can land on a subdivision vertex; resolve it to the
// original edge's endpoint.
int project_move(const Game& original, const Subdivision& sub, int target) {
  int p = project_vertex(sub, target);
  if (p >= 0) return p;
  return original.arena.edges[static_cast<std::size_t>(-1 - p)].dst;
}

FiniteStateStrategy project_product_strategy(const Game& original, const Subdivision& sub,
                                             const Product& product,
                                             const ParitySolution& product_solution, int player,
                                             const RequestMemory& original_memory) {
  FiniteStateStrategy fs;
  fs.player = player;
  fs.memory = original_memory.structure;
  const int n = original.arena.vertex_count();
  const int m = fs.memory.state_count();
  fs.next_move.assign(static_cast<std::size_t>(n),
                      std::vector<int>(static_cast<std::size_t>(m), -1));
  const PositionalStrategy& strat = product_solution.strategy(player);
  for (int v = 0; v < n; ++v) {
    if (original.arena.owner[static_cast<std::size_t>(v)] != player) continue;
    for (int s = 0; s < m; ++s) {
      int q = product.at[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
      if (q < 0 || !strat.defined(q)) continue;
      auto [x, s2] = product.vm[static_cast<std::size_t>(strat.at(q))];
      (void)s2;
      fs.next_move[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] =
          project_move(original, sub, x);
    }
  }
  return fs;
}

}  // namespace

BoundedCostSolution solve_bounded_cost_parity(const Game& game, const ParityBackend& backend) {
  if (game.kind != GameKind::Parity)
    throw std::invalid_argument("solve_bounded_cost_parity: parity games only");
  if (game.arena.cost_dimension != 1)
    throw std::invalid_argument(
        "solve_bounded_cost_parity: multi-dimensional costs, use the Streett pipeline");
  if (auto violations = validate_game(game); !violations.empty())
    throw std::invalid_argument("solve_bounded_cost_parity: " + violations.front());
  const ParityBackend solve = backend ? backend : default_parity_backend();

  BoundedCostSolution result;
  result.sub = subdivide(game);
  const Arena& sub_arena = result.sub.game.arena;
  result.memory = build_request_memory(sub_arena, result.sub.game.coloring);
  result.product = build_product(sub_arena, result.memory.structure, /*full=*/true);
  result.product_color =
      pcrr_coloring(result.product, result.sub.game.coloring, increment_vertices(sub_arena, 0),
                    result.memory, result.sub.game.coloring.top_odd());
  ParityColoring product_coloring{result.product_color};
  result.product_solution = solve(result.product.arena, product_coloring);

  for (int v = 0; v < sub_arena.vertex_count(); ++v) {
    int q = result.product.at[static_cast<std::size_t>(v)]
                             [static_cast<std::size_t>(result.memory.structure.init[static_cast<std::size_t>(v)])];
    int w = result.product_solution.winner[static_cast<std::size_t>(q)];
    (w == 0 ? result.region0_sub : result.region1_sub).push_back(v);
    int orig = result.sub.origin_vertex[static_cast<std::size_t>(v)];
    if (orig >= 0) (w == 0 ? result.region0 : result.region1).push_back(orig);
  }

  RequestMemory original_memory = build_request_memory(game.arena, game.coloring);
  result.strategy1 = project_product_strategy(game, result.sub, result.product,
                                              result.product_solution, 1, original_memory);
  result.strategy0_fs = project_product_strategy(game, result.sub, result.product,
                                                 result.product_solution, 0, original_memory);
  result.strategy0 = extract_positional_max(result);
  return result;
}

PositionalStrategy extract_positional_max(const BoundedCostSolution& solution) {
  const Arena& sub_arena = solution.sub.game.arena;
  const int m = solution.memory.structure.state_count();

  // The state list is ordered none < smallest odd < ... ; the winning region
  // must be downward closed along it.
  for (int v = 0; v < sub_arena.vertex_count(); ++v)
    for (int s = 1; s < m; ++s) {
      int q_hi = solution.product.at[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
      int q_lo = solution.product.at[static_cast<std::size_t>(v)][static_cast<std::size_t>(s - 1)];
      if (solution.product_solution.winner[static_cast<std::size_t>(q_hi)] == 0 &&
          solution.product_solution.winner[static_cast<std::size_t>(q_lo)] != 0)
        throw std::logic_error(
            "extract_positional_max: winning region not downward closed in the memory");
    }

  // Original vertices keep their indices under subdivision.
  int n_orig = 0;
  for (int o : solution.sub.origin_vertex) n_orig = std::max(n_orig, o + 1);
  PositionalStrategy strategy;
  strategy.player = 0;
  strategy.next.assign(static_cast<std::size_t>(n_orig), -1);

  std::vector<char> in_region0_sub = to_mask(sub_arena.vertex_count(), solution.region0_sub);
  for (int v = 0; v < sub_arena.vertex_count(); ++v) {
    int orig = solution.sub.origin_vertex[static_cast<std::size_t>(v)];
    if (orig < 0 || !in_region0_sub[static_cast<std::size_t>(v)]) continue;
    if (sub_arena.owner[static_cast<std::size_t>(v)] != 0) continue;
    int best = -1;
    for (int s = 0; s < m; ++s) {
      int q = solution.product.at[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
      if (solution.product_solution.winner[static_cast<std::size_t>(q)] == 0) best = s;
    }
    if (best < 0) throw std::logic_error("extract_positional_max: region0 vertex with no winning state");
    int q = solution.product.at[static_cast<std::size_t>(v)][static_cast<std::size_t>(best)];
    if (!solution.product_solution.strategy0.defined(q))
      throw std::logic_error("extract_positional_max: missing product strategy");
    auto [x, s2] = solution.product.vm[static_cast<std::size_t>(solution.product_solution.strategy0.at(q))];
    (void)s2;
    int target = solution.sub.origin_vertex[static_cast<std::size_t>(x)];
    if (target < 0) {
      int e = solution.sub.edge_of_sub[static_cast<std::size_t>(x)];
      // The subdivided half-edge belongs to an original edge of this solve's
      // input; recover its endpoint from the subdivided arena.
      int sub_vertex = solution.sub.sub_of_edge[static_cast<std::size_t>(e)];
      int out_edge = sub_arena.out[static_cast<std::size_t>(sub_vertex)].front();
      int sub_target = sub_arena.edges[static_cast<std::size_t>(out_edge)].dst;
      target = solution.sub.origin_vertex[static_cast<std::size_t>(sub_target)];
    }
    strategy.next[static_cast<std::size_t>(orig)] = target;
  }
  return strategy;
}

CostParitySolution solve_cost_parity(const Game& game, const ParityBackend& backend) {
  if (game.kind != GameKind::Parity)
    throw std::invalid_argument("solve_cost_parity: parity games only");
  const int n = game.arena.vertex_count();

  CostParitySolution result;
  result.certificate.player = 0;

  Subgame current;
  current.game = game;
  current.origin.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) current.origin[static_cast<std::size_t>(v)] = v;

  std::vector<char> settled(static_cast<std::size_t>(n), 0);
  for (;;) {
    ++result.iterations;
    if (result.iterations > n + 1)
      throw std::logic_error("solve_cost_parity: fixpoint exceeded n+1 iterations");
    auto bounded = std::make_shared<BoundedCostSolution>(
        solve_bounded_cost_parity(current.game, backend));
    std::string line = "iteration " + std::to_string(result.iterations) + ": X =";
    for (int v : bounded->region0) {
      line += " " + game.arena.name(current.origin[static_cast<std::size_t>(v)]);
    }
    if (bounded->region0.empty()) line += " (empty)";
    if (bounded->region0.empty()) {
      result.trace.push_back(line);
      result.final_subgame = std::move(current);
      result.final_bounded = std::move(bounded);
      break;
    }

    AttractorResult att = attractor(current.game.arena, 0, bounded->region0);

    CertificateLayer layer;
    layer.rank.assign(static_cast<std::size_t>(n), -1);
    layer.bounded.player = 0;
    layer.bounded.next.assign(static_cast<std::size_t>(n), -1);
    layer.attractor_moves.player = 0;
    layer.attractor_moves.next.assign(static_cast<std::size_t>(n), -1);
    for (int v : bounded->region0)
      layer.x.push_back(current.origin[static_cast<std::size_t>(v)]);
    for (int v : att.set) {
      int orig = current.origin[static_cast<std::size_t>(v)];
      layer.attr.push_back(orig);
      layer.rank[static_cast<std::size_t>(orig)] = att.rank[static_cast<std::size_t>(v)];
      settled[static_cast<std::size_t>(orig)] = 1;
      if (att.strategy.defined(v))
        layer.attractor_moves.next[static_cast<std::size_t>(orig)] =
            current.origin[static_cast<std::size_t>(att.strategy.at(v))];
    }
    for (int v : bounded->region0)
      if (bounded->strategy0.defined(v))
        layer.bounded.next[static_cast<std::size_t>(current.origin[static_cast<std::size_t>(v)])] =
            current.origin[static_cast<std::size_t>(bounded->strategy0.at(v))];
    std::sort(layer.x.begin(), layer.x.end());
    std::sort(layer.attr.begin(), layer.attr.end());
    line += " | W =";
    for (int v = 0; v < n; ++v)
      if (settled[static_cast<std::size_t>(v)]) line += " " + game.arena.name(v);
    result.trace.push_back(line);
    result.certificate.layers.push_back(std::move(layer));

    Subgame next = remove_region(current.game, att.set);
    for (int& o : next.origin) o = current.origin[static_cast<std::size_t>(o)];
    current = std::move(next);
  }

  result.region0 = to_sorted_list(settled);
  for (int v = 0; v < n; ++v)
    if (!settled[static_cast<std::size_t>(v)]) result.region1.push_back(v);
  result.strategy0 = result.certificate.flatten(n);
  return result;
}

int PositionalDriver::choose(int vertex) {
  if (!strategy_.defined(vertex))
    throw std::invalid_argument("positional driver: undefined at vertex");
  return strategy_.at(vertex);
}

void FiniteStateDriver::begin(int start) {
  state_ = strategy_.memory.init[static_cast<std::size_t>(start)];
}

void FiniteStateDriver::observe(int vertex) {
  if (state_ < 0) throw std::logic_error("finite-state driver: begin() not called");
  state_ = strategy_.memory.run(state_, vertex);
}

int FiniteStateDriver::choose(int vertex) {
  int move = strategy_.at(vertex, state_);
  if (move < 0) throw std::invalid_argument("finite-state driver: undefined at vertex/state");
  return move;
}

int FirstSuccessorDriver::choose(int vertex) {
  return arena_->successors(vertex).front();
}

SpoilerDriver::SpoilerDriver(const Game& game, const CostParitySolution& solution,
                             std::size_t suffix_cap)
    : game_(&game), subgame_(solution.final_subgame), suffix_cap_(suffix_cap) {
  in_region1_ = to_mask(game.arena.vertex_count(), solution.region1);
  to_sub_.assign(static_cast<std::size_t>(game.arena.vertex_count()), -1);
  for (std::size_t v = 0; v < subgame_.origin.size(); ++v)
    to_sub_[static_cast<std::size_t>(subgame_.origin[v])] = static_cast<int>(v);
  if (!solution.final_bounded)
    throw std::invalid_argument("spoiler: solution carries no bounded-game data");
  tau_ = solution.final_bounded->strategy1;
}

void SpoilerDriver::begin(int start) {
  if (!in_region1_[static_cast<std::size_t>(start)])
    throw std::invalid_argument("spoiler: start vertex outside region1");
  bound_ = 1;
  reset_at(start);
  started_ = true;
}

void SpoilerDriver::reset_at(int vertex) {
  suffix_.clear();
  suffix_.push_back(vertex);
  open_.clear();
  int c = game_->coloring.at(vertex);
  if (c % 2 == 1) open_[c] = 0;
  memory_state_ = tau_.memory.init[static_cast<std::size_t>(to_sub_[static_cast<std::size_t>(vertex)])];
}

void SpoilerDriver::append(int vertex) {
  if (suffix_.size() >= suffix_cap_)
    throw std::runtime_error("spoiler: recorded suffix exceeded its cap");
  int e = game_->arena.edge_between(suffix_.back(), vertex);
  if (e < 0) throw std::logic_error("spoiler: play uses a nonexistent edge");
  if (is_increment(game_->arena.edges[static_cast<std::size_t>(e)].cost, 0))
    for (auto& [color, cost] : open_) ++cost;
  suffix_.push_back(vertex);
  int c = game_->coloring.at(vertex);
  if (c % 2 == 0) {
    for (auto it = open_.begin(); it != open_.end();)
      it = it->first <= c ? open_.erase(it) : std::next(it);
  } else {
    open_.try_emplace(c, 0);
  }
  memory_state_ = tau_.memory.run(memory_state_, to_sub_[static_cast<std::size_t>(vertex)]);
}

void SpoilerDriver::observe(int vertex) {
  if (!started_) throw std::logic_error("spoiler: begin() not called");
  if (!in_region1_[static_cast<std::size_t>(vertex)])
    throw std::logic_error("spoiler: play left region1");
  bool exceeded = false;
  for (const auto& [color, cost] : open_)
    if (cost > bound_) exceeded = true;
  if (exceeded) {
    ++bound_;
    reset_at(vertex);
  } else {
    append(vertex);
  }
}

int SpoilerDriver::choose(int vertex) {
  int sub = to_sub_[static_cast<std::size_t>(vertex)];
  if (sub < 0 || game_->arena.owner[static_cast<std::size_t>(vertex)] != 1)
    throw std::invalid_argument("spoiler: asked to move at a foreign vertex");
  int move = tau_.at(sub, memory_state_);
  if (move < 0) throw std::logic_error("spoiler: bounded strategy undefined");
  return subgame_.origin[static_cast<std::size_t>(move)];
}

std::vector<PlayStep> simulate_play(const Game& game, PlayDriver* driver0, PlayDriver* driver1,
                                    int start, int steps) {
  if (start < 0 || start >= game.arena.vertex_count())
    throw std::invalid_argument("simulate_play: start vertex out of range");
  RequestMemory memory = build_request_memory(game.arena, game.coloring);
  if (driver0) driver0->begin(start);
  if (driver1) driver1->begin(start);

  auto* spoiler0 = dynamic_cast<SpoilerDriver*>(driver0);
  auto* spoiler1 = dynamic_cast<SpoilerDriver*>(driver1);
  auto bound_now = [&]() -> std::int64_t {
    if (spoiler0) return spoiler0->bound();
    if (spoiler1) return spoiler1->bound();
    return -1;
  };

  std::vector<PlayStep> trace;
  int state = memory.structure.init[static_cast<std::size_t>(start)];
  std::int64_t cost_since = 0;
  trace.push_back({start, state, memory.state_color[static_cast<std::size_t>(state)], 0, bound_now()});
  int current = start;
  for (int i = 0; i < steps; ++i) {
    PlayDriver* driver = game.arena.owner[static_cast<std::size_t>(current)] == 0 ? driver0 : driver1;
    if (!driver)
      throw std::invalid_argument("simulate_play: no driver for the owner of " +
                                  game.arena.name(current));
    int next = driver->choose(current);
    int e = game.arena.edge_between(current, next);
    if (e < 0)
      throw std::logic_error("simulate_play: driver chose a nonexistent edge from " +
                             game.arena.name(current));
    if (driver0) driver0->observe(next);
    if (driver1) driver1->observe(next);
    if (state != memory.none_state &&
        is_increment(game.arena.edges[static_cast<std::size_t>(e)].cost, 0))
      ++cost_since;
    state = memory.structure.run(state, next);
    if (state == memory.none_state) cost_since = 0;
    if (trace.back().request_state == memory.none_state && state != memory.none_state)
      cost_since = 0;
    trace.push_back({next, state, memory.state_color[static_cast<std::size_t>(state)], cost_since,
                     bound_now()});
    current = next;
  }
  return trace;
}

std::int64_t max_open_request_cost(const Game& game, const std::vector<int>& trace) {
  std::map<int, std::int64_t> open;
  std::int64_t best = 0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i > 0) {
      int e = game.arena.edge_between(trace[i - 1], trace[i]);
      if (e < 0) throw std::invalid_argument("max_open_request_cost: not a play");
      if (is_increment(game.arena.edges[static_cast<std::size_t>(e)].cost, 0))
        for (auto& [color, cost] : open) best = std::max(best, ++cost);
    }
    int c = game.coloring.at(trace[i]);
    if (c % 2 == 0) {
      for (auto it = open.begin(); it != open.end();)
        it = it->first <= c ? open.erase(it) : std::next(it);
    } else {
      open.try_emplace(c, 0);
    }
  }
  return best;
}

}  // namespace costly
