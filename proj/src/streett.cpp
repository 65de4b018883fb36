#include "costly/streett.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace costly {

MemoryStructure build_open_request_memory(const Arena& arena, const StreettSpec& spec) {
  if (spec.pair_count > 20)
    throw std::runtime_error("open-request memory: too many pairs");
  const int d = spec.pair_count;
  const std::uint32_t states = 1u << d;
  MemoryStructure memory;
  // State index == subset mask, ascending; keeps the structure aligned
  // across the original and the subdivided arena.
  for (std::uint32_t mask = 0; mask < states; ++mask) {
    std::string name = "{";
    for (int c = 0; c < d; ++c)
      if ((mask >> c) & 1u) name += (name.size() > 1 ? "," : "") + std::to_string(c);
    name += "}";
    memory.state_names.push_back(std::move(name));
  }
  const int n = arena.vertex_count();
  memory.init.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    memory.init[static_cast<std::size_t>(v)] = static_cast<int>(
        spec.request_mask[static_cast<std::size_t>(v)] & ~spec.response_mask[static_cast<std::size_t>(v)]);
  memory.update.assign(states, std::vector<int>(static_cast<std::size_t>(n), 0));
  for (std::uint32_t mask = 0; mask < states; ++mask)
    for (int v = 0; v < n; ++v)
      memory.update[mask][static_cast<std::size_t>(v)] = static_cast<int>(
          (mask | spec.request_mask[static_cast<std::size_t>(v)]) &
          ~spec.response_mask[static_cast<std::size_t>(v)]);
  return memory;
}

std::uint32_t open_set_of_state(const MemoryStructure& memory, int state) {
  (void)memory;
  return static_cast<std::uint32_t>(state);
}

namespace {

// Index-appearance-record memory: a permutation of the pair indices ordered
// by how long ago each pair was last answered (front = longest), plus the
// color emitted by the last step. Responses move their pairs to the back;
// the deeper (closer to the front) a step reaches, the more decisive its
// color.
struct IarBuilder {
  const Arena& arena;
  const StreettSpec& spec;
  int d;
  std::vector<std::vector<int>> perms;          // interned permutations
  std::map<std::vector<int>, int> perm_index;
  std::map<std::pair<int, int>, int> state_index;  // (perm id, color) -> state
  std::vector<std::pair<int, int>> states;

  IarBuilder(const Arena& a, const StreettSpec& s) : arena(a), spec(s), d(s.pair_count) {}

  int intern_perm(const std::vector<int>& perm) {
    auto it = perm_index.find(perm);
    if (it != perm_index.end()) return it->second;
    int id = static_cast<int>(perms.size());
    perms.push_back(perm);
    perm_index.emplace(perm, id);
    return id;
  }

  int intern_state(int perm_id, int color) {
    auto key = std::make_pair(perm_id, color);
    auto it = state_index.find(key);
    if (it != state_index.end()) return it->second;
    int id = static_cast<int>(states.size());
    states.push_back(key);
    state_index.emplace(key, id);
    return id;
  }

  std::pair<int, int> step(int perm_id, int v) {
    const std::vector<int>& perm = perms[static_cast<std::size_t>(perm_id)];
    int response_depth = 0;  // 1-based position, 0 = none
    int request_depth = 0;
    for (int pos = 1; pos <= d; ++pos) {
      int pair = perm[static_cast<std::size_t>(pos - 1)];
      if (spec.responds(v, pair) && response_depth == 0) response_depth = pos;
      if (spec.requests(v, pair) && request_depth == 0) request_depth = pos;
    }
    int color = 0;
    if (response_depth > 0) color = std::max(color, 2 * (d - response_depth) + 2);
    if (request_depth > 0) color = std::max(color, 2 * (d - request_depth) + 1);
    std::vector<int> next;
    next.reserve(perm.size());
    for (int pair : perm)
      if (!spec.responds(v, pair)) next.push_back(pair);
    for (int pair : perm)
      if (spec.responds(v, pair)) next.push_back(pair);
    return {intern_perm(next), color};
  }

  MemoryStructure build() {
    std::vector<int> identity(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) identity[static_cast<std::size_t>(c)] = c;
    int id_perm = intern_perm(identity);

    MemoryStructure memory;
    memory.init.resize(static_cast<std::size_t>(arena.vertex_count()));
    std::vector<int> todo;
    auto intern = [&](int perm_id, int color) {
      auto key = std::make_pair(perm_id, color);
      bool fresh = !state_index.count(key);
      int s = intern_state(perm_id, color);
      if (fresh) todo.push_back(s);
      return s;
    };
    for (int v = 0; v < arena.vertex_count(); ++v) {
      auto [p, c] = step(id_perm, v);
      memory.init[static_cast<std::size_t>(v)] = intern(p, c);
    }
    std::size_t done = 0;
    while (done < todo.size()) {
      int s = todo[done++];
      auto [perm_id, color] = states[static_cast<std::size_t>(s)];
      (void)color;
      if (memory.update.size() < static_cast<std::size_t>(s) + 1)
        memory.update.resize(static_cast<std::size_t>(s) + 1);
      memory.update[static_cast<std::size_t>(s)].resize(
          static_cast<std::size_t>(arena.vertex_count()));
      for (int v = 0; v < arena.vertex_count(); ++v) {
        auto [p2, c2] = step(perm_id, v);
        memory.update[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] = intern(p2, c2);
      }
    }
    memory.update.resize(states.size());
    for (auto& row : memory.update) row.resize(static_cast<std::size_t>(arena.vertex_count()), 0);
    for (const auto& [perm_id, color] : states) {
      std::string name;
      for (int pair : perms[static_cast<std::size_t>(perm_id)]) {
        if (!name.empty()) name += ".";
        name += std::to_string(pair);
      }
      memory.state_names.push_back(name + ":" + std::to_string(color));
    }
    return memory;
  }
};

struct StreettCore {
  MemoryStructure record;
  Product product;
  ParitySolution product_solution;
  std::vector<int> winner;  // per arena vertex
};

StreettCore solve_streett_core(const Arena& arena, const StreettSpec& spec,
                               const ParityBackend& backend) {
  StreettCore core;
  IarBuilder builder(arena, spec);
  core.record = builder.build();
  core.product = build_product(arena, core.record, /*full=*/false);
  ParityColoring coloring;
  coloring.color.resize(static_cast<std::size_t>(core.product.arena.vertex_count()));
  for (int q = 0; q < core.product.arena.vertex_count(); ++q) {
    int state = core.product.vm[static_cast<std::size_t>(q)].second;
    coloring.color[static_cast<std::size_t>(q)] =
        builder.states[static_cast<std::size_t>(state)].second;
  }
  core.product_solution = backend(core.product.arena, coloring);
  core.winner.resize(static_cast<std::size_t>(arena.vertex_count()));
  for (int v = 0; v < arena.vertex_count(); ++v) {
    int q = core.product.at[static_cast<std::size_t>(v)]
                           [static_cast<std::size_t>(core.record.init[static_cast<std::size_t>(v)])];
    core.winner[static_cast<std::size_t>(v)] =
        core.product_solution.winner[static_cast<std::size_t>(q)];
  }
  return core;
}

Arena restrict_player1_vertex(const Arena& arena, int v, int target) {
  Arena copy = arena;
  copy.edges.clear();
  for (auto& adj : copy.out) adj.clear();
  for (auto& adj : copy.in) adj.clear();
  for (const Edge& edge : arena.edges) {
    if (edge.src == v && edge.dst != target) continue;
    copy.add_edge(edge.src, edge.dst, edge.cost);
  }
  return copy;
}

}  // namespace

StreettSolution solve_streett(const Arena& arena, const StreettSpec& spec,
                              const ParityBackend& backend0, int pair_cap) {
  if (spec.pair_count > pair_cap)
    throw std::runtime_error("solve_streett: pair count " + std::to_string(spec.pair_count) +
                             " exceeds the record cap " + std::to_string(pair_cap));
  const ParityBackend backend = backend0 ? backend0 : default_parity_backend();
  StreettCore core = solve_streett_core(arena, spec, backend);

  StreettSolution solution;
  solution.record_states = core.record.state_count();
  for (int v = 0; v < arena.vertex_count(); ++v)
    (core.winner[static_cast<std::size_t>(v)] == 0 ? solution.region0 : solution.region1)
        .push_back(v);

  // Player 0: the product's positional strategy read through the record.
  solution.strategy0.player = 0;
  solution.strategy0.memory = core.record;
  solution.strategy0.next_move.assign(
      static_cast<std::size_t>(arena.vertex_count()),
      std::vector<int>(static_cast<std::size_t>(core.record.state_count()), -1));
  for (int q = 0; q < core.product.arena.vertex_count(); ++q) {
    if (!core.product_solution.strategy0.defined(q)) continue;
    auto [v, s] = core.product.vm[static_cast<std::size_t>(q)];
    auto [v2, s2] = core.product.vm[static_cast<std::size_t>(core.product_solution.strategy0.at(q))];
    (void)s2;
    solution.strategy0.next_move[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] = v2;
  }

  // Player 1 is positional in classical Streett games: commit one choice at a
  // time, re-solving to keep the winning region intact.
  solution.strategy1.player = 1;
  solution.strategy1.next.assign(static_cast<std::size_t>(arena.vertex_count()), -1);
  Arena restricted = arena;
  for (int v : solution.region1) {
    if (arena.owner[static_cast<std::size_t>(v)] != 1) continue;
    std::vector<int> succ = restricted.successors(v);
    if (succ.size() == 1) {
      solution.strategy1.next[static_cast<std::size_t>(v)] = succ.front();
      continue;
    }
    bool fixed = false;
    for (int u : succ) {
      Arena candidate = restrict_player1_vertex(restricted, v, u);
      StreettCore check = solve_streett_core(candidate, spec, backend);
      bool keeps = true;
      for (int w : solution.region1)
        if (check.winner[static_cast<std::size_t>(w)] != 1) {
          keeps = false;
          break;
        }
      if (keeps) {
        restricted = std::move(candidate);
        solution.strategy1.next[static_cast<std::size_t>(v)] = u;
        fixed = true;
        break;
      }
    }
    if (!fixed)
      throw std::logic_error("solve_streett: no committable choice at " + arena.name(v));
  }
  return solution;
}

BoundedCostStreettSolution solve_bounded_cost_streett(const Game& game,
                                                      const ParityBackend& backend,
                                                      int pair_cap) {
  if (game.kind != GameKind::Streett)
    throw std::invalid_argument("solve_bounded_cost_streett: Streett games only");
  if (auto violations = validate_game(game); !violations.empty())
    throw std::invalid_argument("solve_bounded_cost_streett: " + violations.front());
  const int d = game.streett.pair_count;

  BoundedCostStreettSolution result;
  result.sub = subdivide(game);
  const Arena& sub_arena = result.sub.game.arena;
  result.open_memory = build_open_request_memory(sub_arena, result.sub.game.streett);
  result.product = build_product(sub_arena, result.open_memory, /*full=*/false);
  const Arena& product_arena = result.product.arena;

  // 2d pairs on the product: the original pair answered also by "request not
  // open", and per dimension "increments settle" answered the same way.
  result.derived.pair_count = 2 * d;
  result.derived.request_mask.assign(static_cast<std::size_t>(product_arena.vertex_count()), 0);
  result.derived.response_mask.assign(static_cast<std::size_t>(product_arena.vertex_count()), 0);
  std::vector<std::vector<char>> inc;
  inc.reserve(static_cast<std::size_t>(d));
  for (int c = 0; c < d; ++c) inc.push_back(increment_vertices(sub_arena, c));
  for (int q = 0; q < product_arena.vertex_count(); ++q) {
    auto [v, state] = result.product.vm[static_cast<std::size_t>(q)];
    std::uint32_t open = open_set_of_state(result.open_memory, state);
    std::uint32_t req = 0, resp = 0;
    for (int c = 0; c < d; ++c) {
      bool not_open = ((open >> c) & 1u) == 0;
      if (result.sub.game.streett.requests(v, c)) req |= 1u << c;
      if (result.sub.game.streett.responds(v, c) || not_open) resp |= 1u << c;
      if (inc[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)]) req |= 1u << (d + c);
      if (not_open) resp |= 1u << (d + c);
    }
    result.derived.request_mask[static_cast<std::size_t>(q)] = req;
    result.derived.response_mask[static_cast<std::size_t>(q)] = resp;
  }

  result.product_solution = solve_streett(product_arena, result.derived, backend, pair_cap);

  std::vector<char> product_region0(static_cast<std::size_t>(product_arena.vertex_count()), 0);
  for (int q : result.product_solution.region0) product_region0[static_cast<std::size_t>(q)] = 1;
  for (int v = 0; v < sub_arena.vertex_count(); ++v) {
    int q = result.product.at[static_cast<std::size_t>(v)]
                             [static_cast<std::size_t>(result.open_memory.init[static_cast<std::size_t>(v)])];
    bool zero = product_region0[static_cast<std::size_t>(q)];
    (zero ? result.region0_sub : result.region1_sub).push_back(v);
    int orig = result.sub.origin_vertex[static_cast<std::size_t>(v)];
    if (orig >= 0) (zero ? result.region0 : result.region1).push_back(orig);
  }

  // Player 1: positional on the product = open-request memory on the
  // original arena (the subdivision vertices never touch the open set).
  MemoryStructure original_memory = build_open_request_memory(game.arena, game.streett);
  result.strategy1.player = 1;
  result.strategy1.memory = original_memory;
  result.strategy1.next_move.assign(
      static_cast<std::size_t>(game.arena.vertex_count()),
      std::vector<int>(static_cast<std::size_t>(original_memory.state_count()), -1));
  for (int v = 0; v < game.arena.vertex_count(); ++v) {
    if (game.arena.owner[static_cast<std::size_t>(v)] != 1) continue;
    for (int s = 0; s < original_memory.state_count(); ++s) {
      int q = result.product.at[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
      if (q < 0 || !result.product_solution.strategy1.defined(q)) continue;
      auto [x, s2] = result.product.vm[static_cast<std::size_t>(result.product_solution.strategy1.at(q))];
      (void)s2;
      int target = result.sub.origin_vertex[static_cast<std::size_t>(x)];
      if (target < 0) {
        int e = result.sub.edge_of_sub[static_cast<std::size_t>(x)];
        target = game.arena.edges[static_cast<std::size_t>(e)].dst;
      }
      result.strategy1.next_move[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] = target;
    }
  }

  // Player 0 lives on the subdivided arena: memory is (open set, record),
  // combined by running the record over the product the open set induces.
  const MemoryStructure& record = result.product_solution.strategy0.memory;
  MemoryStructure combined;
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> combo_states;
  std::vector<int> todo;
  auto intern = [&](int open_state, int record_state) {
    auto key = std::make_pair(open_state, record_state);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(combo_states.size());
    combo_states.push_back(key);
    index.emplace(key, id);
    todo.push_back(id);
    return id;
  };
  auto product_at = [&](int v, int open_state) {
    return result.product.at[static_cast<std::size_t>(v)][static_cast<std::size_t>(open_state)];
  };
  combined.init.resize(static_cast<std::size_t>(sub_arena.vertex_count()));
  for (int v = 0; v < sub_arena.vertex_count(); ++v) {
    int open_state = result.open_memory.init[static_cast<std::size_t>(v)];
    combined.init[static_cast<std::size_t>(v)] =
        intern(open_state, record.init[static_cast<std::size_t>(product_at(v, open_state))]);
  }
  std::size_t done = 0;
  while (done < todo.size()) {
    int id = todo[done++];
    auto [open_state, record_state] = combo_states[static_cast<std::size_t>(id)];
    if (combined.update.size() <= static_cast<std::size_t>(id))
      combined.update.resize(static_cast<std::size_t>(id) + 1);
    combined.update[static_cast<std::size_t>(id)].resize(
        static_cast<std::size_t>(sub_arena.vertex_count()));
    for (int v = 0; v < sub_arena.vertex_count(); ++v) {
      int open2 = result.open_memory.run(open_state, v);
      int q = product_at(v, open2);
      // The update map is total, but some (state, vertex) combinations can
      // never occur along a play; park those on the first state.
      combined.update[static_cast<std::size_t>(id)][static_cast<std::size_t>(v)] =
          q < 0 ? 0 : intern(open2, record.run(record_state, q));
    }
  }
  combined.update.resize(combo_states.size());
  for (auto& row : combined.update)
    row.resize(static_cast<std::size_t>(sub_arena.vertex_count()), 0);
  for (const auto& [open_state, record_state] : combo_states)
    combined.state_names.push_back(
        result.open_memory.state_names[static_cast<std::size_t>(open_state)] + "|" +
        record.state_names[static_cast<std::size_t>(record_state)]);

  result.strategy0.player = 0;
  result.strategy0.memory = combined;
  result.strategy0.next_move.assign(
      static_cast<std::size_t>(sub_arena.vertex_count()),
      std::vector<int>(combo_states.size(), -1));
  for (int v = 0; v < sub_arena.vertex_count(); ++v) {
    if (sub_arena.owner[static_cast<std::size_t>(v)] != 0) continue;
    for (std::size_t id = 0; id < combo_states.size(); ++id) {
      auto [open_state, record_state] = combo_states[id];
      int q = result.product.at[static_cast<std::size_t>(v)][static_cast<std::size_t>(open_state)];
      if (q < 0) continue;
      int move = result.product_solution.strategy0.at(q, record_state);
      if (move < 0) continue;
      result.strategy0.next_move[static_cast<std::size_t>(v)][id] =
          result.product.vm[static_cast<std::size_t>(move)].first;
    }
  }
  return result;
}

CostStreettSolution solve_cost_streett(const Game& game, const ParityBackend& backend,
                                       int pair_cap) {
  if (game.kind != GameKind::Streett)
    throw std::invalid_argument("solve_cost_streett: Streett games only");
  const int n = game.arena.vertex_count();

  CostStreettSolution result;
  result.certificate.player = 0;

  Subgame current;
  current.game = game;
  current.origin.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) current.origin[static_cast<std::size_t>(v)] = v;

  std::vector<char> settled(static_cast<std::size_t>(n), 0);
  for (;;) {
    ++result.iterations;
    if (result.iterations > n + 1)
      throw std::logic_error("solve_cost_streett: fixpoint exceeded n+1 iterations");
    BoundedCostStreettSolution bounded = solve_bounded_cost_streett(current.game, backend, pair_cap);
    std::string line = "iteration " + std::to_string(result.iterations) + ": X =";
    for (int v : bounded.region0)
      line += " " + game.arena.name(current.origin[static_cast<std::size_t>(v)]);
    if (bounded.region0.empty()) {
      line += " (empty)";
      result.trace.push_back(line);
      break;
    }

    AttractorResult att = attractor(current.game.arena, 0, bounded.region0);
    CertificateLayer layer;
    layer.rank.assign(static_cast<std::size_t>(n), -1);
    layer.bounded.player = 0;
    layer.bounded.next.assign(static_cast<std::size_t>(n), -1);
    layer.attractor_moves.player = 0;
    layer.attractor_moves.next.assign(static_cast<std::size_t>(n), -1);
    layer.bounded_fs = bounded.strategy0;
    result.layer_memory_sizes.push_back(bounded.strategy0.memory.state_count());
    for (int v : bounded.region0)
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
  for (int size : result.layer_memory_sizes)
    result.pooled_memory_size = std::max(result.pooled_memory_size, size);
  return result;
}

Game encode_parity_as_streett(const Game& game) {
  if (game.kind != GameKind::Parity)
    throw std::invalid_argument("encode_parity_as_streett: parity input expected");
  Game encoded;
  encoded.kind = GameKind::Streett;
  encoded.variant = game.variant;
  encoded.arena = game.arena;

  std::vector<int> odds = game.coloring.odd_colors();
  const int d = std::max<std::size_t>(1, odds.size());
  encoded.streett.pair_count = d;
  encoded.streett.request_mask.assign(static_cast<std::size_t>(game.arena.vertex_count()), 0);
  encoded.streett.response_mask.assign(static_cast<std::size_t>(game.arena.vertex_count()), 0);
  for (int v = 0; v < game.arena.vertex_count(); ++v) {
    int color = game.coloring.at(v);
    for (std::size_t i = 0; i < odds.size(); ++i) {
      if (color == odds[i])
        encoded.streett.request_mask[static_cast<std::size_t>(v)] |= 1u << i;
      if (color % 2 == 0 && color > odds[i])
        encoded.streett.response_mask[static_cast<std::size_t>(v)] |= 1u << i;
    }
  }
  encoded.arena.cost_dimension = d;
  for (Edge& edge : encoded.arena.edges)
    edge.cost.assign(static_cast<std::size_t>(d), edge.cost[0]);
  return encoded;
}

}  // namespace costly
