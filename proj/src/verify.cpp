#include "costly/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>

namespace costly {

std::int64_t default_state_budget() {
  if (const char* env = std::getenv("COSTLY_GAMES_BUDGET")) {
    char* end = nullptr;
    long long value = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && value > 0) return value;
    throw std::runtime_error("COSTLY_GAMES_BUDGET must be a positive integer");
  }
  return 1'000'000;
}

namespace {

std::vector<int> bfs_path_nodes(const std::vector<std::vector<int>>& succ,
                                const std::vector<char>& alive, int start, int goal) {
  std::vector<int> parent(succ.size(), -2);
  std::deque<int> queue;
  if (!alive[static_cast<std::size_t>(start)]) return {};
  parent[static_cast<std::size_t>(start)] = -1;
  queue.push_back(start);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == goal) break;
    for (int w : succ[static_cast<std::size_t>(v)]) {
      if (!alive[static_cast<std::size_t>(w)] || parent[static_cast<std::size_t>(w)] != -2) continue;
      parent[static_cast<std::size_t>(w)] = v;
      queue.push_back(w);
    }
  }
  if (parent[static_cast<std::size_t>(goal)] == -2) return {};
  std::vector<int> path;
  for (int v = goal; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Closed walk through every vertex of a strongly connected set.
std::vector<int> cycle_through_all(const std::vector<std::vector<int>>& succ,
                                   const std::vector<char>& alive, const std::vector<int>& scc) {
  std::vector<int> walk;
  for (std::size_t i = 0; i < scc.size(); ++i) {
    int from = scc[i];
    int to = scc[(i + 1) % scc.size()];
    std::vector<int> path;
    if (from == to) {
      if (scc.size() == 1) {
        // single vertex: needs a self-loop
        path = {from, to};
      } else {
        continue;
      }
    } else {
      path = bfs_path_nodes(succ, alive, from, to);
    }
    if (path.empty()) return {};
    for (std::size_t k = 0; k + 1 < path.size(); ++k) walk.push_back(path[k]);
  }
  return walk;
}

// Vertices of `alive` lying in some strongly connected set whose cycles can
// satisfy every pair.
std::vector<char> streett_good_vertices(const std::vector<std::vector<int>>& succ,
                                        const std::vector<std::uint32_t>& req,
                                        const std::vector<std::uint32_t>& resp, int pair_count,
                                        const std::vector<char>& alive) {
  std::vector<char> good(succ.size(), 0);
  std::vector<std::vector<char>> stack{alive};
  while (!stack.empty()) {
    std::vector<char> current = std::move(stack.back());
    stack.pop_back();
    for (const auto& scc : nontrivial_sccs(succ, current)) {
      std::uint32_t requested = 0, responded = 0;
      for (int v : scc) {
        requested |= req[static_cast<std::size_t>(v)];
        responded |= resp[static_cast<std::size_t>(v)];
      }
      std::uint32_t violated = requested & ~responded &
                               ((pair_count >= 32 ? 0u : (1u << pair_count)) - 1u);
      if (violated == 0) {
        for (int v : scc) good[static_cast<std::size_t>(v)] = 1;
      } else {
        std::vector<char> shrunk(succ.size(), 0);
        bool nonempty = false;
        for (int v : scc) {
          if (req[static_cast<std::size_t>(v)] & violated) continue;
          shrunk[static_cast<std::size_t>(v)] = 1;
          nonempty = true;
        }
        if (nonempty) stack.push_back(std::move(shrunk));
      }
    }
  }
  return good;
}

std::optional<CycleWitness> find_streett_good_cycle(const std::vector<std::vector<int>>& succ,
                                                    const std::vector<std::uint32_t>& req,
                                                    const std::vector<std::uint32_t>& resp,
                                                    int pair_count,
                                                    const std::vector<int>& starts) {
  std::vector<char> all(succ.size(), 1);
  std::vector<char> good = streett_good_vertices(succ, req, resp, pair_count, all);
  // Rebuild the witness SCC around some good vertex: good vertices were
  // marked per surviving component, so recompute that component.
  std::vector<char> good_only = good;
  for (const auto& scc : nontrivial_sccs(succ, good_only)) {
    std::uint32_t requested = 0, responded = 0;
    for (int v : scc) {
      requested |= req[static_cast<std::size_t>(v)];
      responded |= resp[static_cast<std::size_t>(v)];
    }
    if ((requested & ~responded) != 0) continue;
    std::vector<char> inside(succ.size(), 0);
    for (int v : scc) inside[static_cast<std::size_t>(v)] = 1;
    std::vector<int> cycle = cycle_through_all(succ, inside, scc);
    if (cycle.empty()) continue;
    for (int start : starts) {
      std::vector<int> path = bfs_path_nodes(succ, all, start, cycle.front());
      if (path.empty()) continue;
      CycleWitness witness;
      witness.path.assign(path.begin(), path.end() - 1);
      witness.cycle = std::move(cycle);
      return witness;
    }
  }
  return std::nullopt;
}

std::optional<CycleWitness> find_streett_violation(const std::vector<std::vector<int>>& succ,
                                                   const std::vector<std::uint32_t>& req,
                                                   const std::vector<std::uint32_t>& resp,
                                                   int pair_count,
                                                   const std::vector<int>& starts) {
  std::vector<char> all(succ.size(), 1);
  for (int pair = 0; pair < pair_count; ++pair) {
    std::vector<char> alive(succ.size(), 0);
    for (std::size_t v = 0; v < succ.size(); ++v)
      alive[v] = ((resp[v] >> pair) & 1u) == 0;
    for (const auto& scc : nontrivial_sccs(succ, alive)) {
      int anchor = -1;
      for (int v : scc)
        if ((req[static_cast<std::size_t>(v)] >> pair) & 1u) {
          anchor = v;
          break;
        }
      if (anchor < 0) continue;
      std::vector<char> inside(succ.size(), 0);
      for (int v : scc) inside[static_cast<std::size_t>(v)] = 1;
      // Cycle through the requesting vertex avoiding the pair's responses.
      std::vector<int> cycle;
      bool self_loop = std::find(succ[static_cast<std::size_t>(anchor)].begin(),
                                 succ[static_cast<std::size_t>(anchor)].end(),
                                 anchor) != succ[static_cast<std::size_t>(anchor)].end();
      if (self_loop) {
        cycle = {anchor};
      } else {
        for (int w : succ[static_cast<std::size_t>(anchor)]) {
          if (!inside[static_cast<std::size_t>(w)]) continue;
          std::vector<int> back = bfs_path_nodes(succ, inside, w, anchor);
          if (back.empty()) continue;
          cycle.push_back(anchor);
          for (std::size_t i = 0; i + 1 < back.size(); ++i) cycle.push_back(back[i]);
          break;
        }
      }
      if (cycle.empty()) continue;
      for (int start : starts) {
        std::vector<int> path = bfs_path_nodes(succ, all, start, anchor);
        if (path.empty()) continue;
        CycleWitness witness;
        witness.path.assign(path.begin(), path.end() - 1);
        witness.cycle = std::move(cycle);
        return witness;
      }
    }
  }
  return std::nullopt;
}

// Strategy-restricted exploration of the reduction product. Works for the
// classical games (no reduction memory) and the bounded cost games
// (subdivided arena plus request/open-request memory), with the strategy's
// own memory threaded through as a third component.
struct Explorer {
  const Arena* base = nullptr;
  const MemoryStructure* reduction = nullptr;  // null for classical games
  const Subdivision* sub = nullptr;            // null when base is the original arena
  const Arena* original = nullptr;
  int player = 0;
  const PositionalStrategy* positional = nullptr;
  const FiniteStateStrategy* finite = nullptr;
  bool strategy_subdivided = false;
  const std::vector<char>* confine = nullptr;  // original coordinates

  std::vector<std::array<int, 3>> nodes;
  std::map<std::array<int, 3>, int> index;
  std::vector<std::vector<int>> succ;
  std::vector<int> starts;
  std::string error;

  int orig_of(int b) const {
    return sub ? sub->origin_vertex[static_cast<std::size_t>(b)] : b;
  }

  int intern(std::array<int, 3> key) {
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(nodes.size());
    nodes.push_back(key);
    index.emplace(key, id);
    succ.emplace_back();
    return id;
  }

  int strategy_state_init(int b) const {
    if (!finite) return 0;
    if (strategy_subdivided) return finite->memory.init[static_cast<std::size_t>(b)];
    int ov = orig_of(b);
    if (ov < 0) throw std::logic_error("explorer: start at a subdivision vertex");
    return finite->memory.init[static_cast<std::size_t>(ov)];
  }

  int strategy_state_step(int t, int b_next) const {
    if (!finite) return 0;
    if (strategy_subdivided) return finite->memory.run(t, b_next);
    int ov = orig_of(b_next);
    return ov >= 0 ? finite->memory.run(t, ov) : t;
  }

  // The strategy's choice lifted to the base arena; -1 if undefined, -2 if
  // not an edge.
  int strategy_move(int b, int t) const {
    int choice;
    if (strategy_subdivided) {
      choice = finite ? finite->at(b, t) : positional->at(b);
      if (choice < 0) return -1;
      return base->edge_between(b, choice) >= 0 ? choice : -2;
    }
    int ov = orig_of(b);
    choice = finite ? finite->at(ov, t) : positional->at(ov);
    if (choice < 0) return -1;
    if (!sub) return base->edge_between(b, choice) >= 0 ? choice : -2;
    int e = original->edge_between(ov, choice);
    if (e < 0) return -2;
    int s = sub->sub_of_edge[static_cast<std::size_t>(e)];
    return s >= 0 ? s : choice;
  }

  bool run(const std::vector<int>& region) {
    std::vector<int> stack;
    for (int v : region) {
      int r = reduction ? reduction->init[static_cast<std::size_t>(v)] : 0;
      int id = intern({v, r, strategy_state_init(v)});
      starts.push_back(id);
      stack.push_back(id);
    }
    std::vector<char> expanded;
    while (!stack.empty()) {
      int id = stack.back();
      stack.pop_back();
      if (static_cast<std::size_t>(id) < expanded.size() && expanded[static_cast<std::size_t>(id)])
        continue;
      if (static_cast<std::size_t>(id) >= expanded.size())
        expanded.resize(static_cast<std::size_t>(id) + 1, 0);
      expanded[static_cast<std::size_t>(id)] = 1;
      auto [b, r, t] = nodes[static_cast<std::size_t>(id)];

      std::vector<int> moves;
      bool strategy_vertex = base->owner[static_cast<std::size_t>(b)] == player &&
                             (strategy_subdivided || orig_of(b) >= 0);
      if (strategy_vertex) {
        int move = strategy_move(b, t);
        if (move == -1) {
          error = "strategy undefined at reachable vertex " + base->name(b);
          return false;
        }
        if (move == -2) {
          error = "strategy at " + base->name(b) + " does not follow an edge";
          return false;
        }
        moves.push_back(move);
      } else {
        moves = base->successors(b);
      }
      for (int b2 : moves) {
        int ov2 = orig_of(b2);
        if (confine && ov2 >= 0 && !(*confine)[static_cast<std::size_t>(ov2)]) {
          error = "play leaves the claimed region along " + base->name(b) + " -> " + base->name(b2);
          return false;
        }
        int r2 = reduction ? reduction->run(r, b2) : 0;
        int id2 = intern({b2, r2, strategy_state_step(t, b2)});
        succ[static_cast<std::size_t>(id)].push_back(id2);
        if (static_cast<std::size_t>(id2) >= expanded.size() ||
            !expanded[static_cast<std::size_t>(id2)])
          stack.push_back(id2);
      }
    }
    return true;
  }

  // Project a node lasso back to the original arena, dropping subdivision
  // vertices.
  Lasso project(const CycleWitness& witness) const {
    Lasso lasso;
    for (int id : witness.path) {
      int ov = orig_of(nodes[static_cast<std::size_t>(id)][0]);
      if (ov >= 0) lasso.prefix.push_back(ov);
    }
    for (int id : witness.cycle) {
      int ov = orig_of(nodes[static_cast<std::size_t>(id)][0]);
      if (ov >= 0) lasso.cycle.push_back(ov);
    }
    return lasso;
  }
};

VerifyResult analyze_parity(const Explorer& explorer, const std::vector<int>& color, int player) {
  const int hostile = player == 0 ? 1 : 0;
  std::vector<char> losing = cycle_parity_reachable(explorer.succ, color, hostile);
  bool bad = false;
  for (int start : explorer.starts)
    if (losing[static_cast<std::size_t>(start)]) bad = true;
  if (!bad) return VerifyResult::accept();
  for (int start : explorer.starts) {
    auto witness = find_parity_cycle(explorer.succ, color, hostile, start);
    if (witness)
      return VerifyResult::reject("reachable cycle with hostile maximal color",
                                  explorer.project(*witness));
  }
  return VerifyResult::reject("reachable cycle with hostile maximal color");
}

VerifyResult analyze_streett(const Explorer& explorer, const std::vector<std::uint32_t>& req,
                             const std::vector<std::uint32_t>& resp, int pair_count, int player) {
  std::optional<CycleWitness> witness =
      player == 0 ? find_streett_violation(explorer.succ, req, resp, pair_count, explorer.starts)
                  : find_streett_good_cycle(explorer.succ, req, resp, pair_count, explorer.starts);
  if (!witness) return VerifyResult::accept();
  return VerifyResult::reject(player == 0 ? "reachable cycle leaves a request unanswered"
                                          : "reachable cycle satisfies every pair",
                              explorer.project(*witness));
}

struct StrategyView {
  const PositionalStrategy* positional = nullptr;
  const FiniteStateStrategy* finite = nullptr;
  int player = 0;
};

StrategyView view_of(const Strategy& strategy) {
  StrategyView view;
  if (const auto* p = std::get_if<PositionalStrategy>(&strategy)) {
    view.positional = p;
    view.player = p->player;
  } else if (const auto* f = std::get_if<FiniteStateStrategy>(&strategy)) {
    view.finite = f;
    view.player = f->player;
  }
  return view;
}

VerifyResult verify_bounded_impl(const Game& game, const Strategy& strategy,
                                 const std::vector<int>& region, int player,
                                 bool strategy_subdivided, const std::vector<char>* confine) {
  StrategyView view = view_of(strategy);
  if (!view.positional && !view.finite)
    return VerifyResult::reject("no finite strategy to verify");
  if (view.player != player) return VerifyResult::reject("strategy declared for the other player");

  Subdivision sub = subdivide(game);
  Explorer explorer;
  explorer.base = &sub.game.arena;
  explorer.sub = &sub;
  explorer.original = &game.arena;
  explorer.player = player;
  explorer.positional = view.positional;
  explorer.finite = view.finite;
  explorer.strategy_subdivided = strategy_subdivided;
  explorer.confine = confine;

  if (game.kind == GameKind::Parity) {
    RequestMemory memory = build_request_memory(sub.game.arena, sub.game.coloring);
    explorer.reduction = &memory.structure;
    if (!explorer.run(region)) return VerifyResult::reject(explorer.error);
    std::vector<char> inc = increment_vertices(sub.game.arena, 0);
    const int top = sub.game.coloring.top_odd();
    std::vector<int> color(explorer.nodes.size());
    for (std::size_t id = 0; id < explorer.nodes.size(); ++id) {
      auto [b, r, t] = explorer.nodes[id];
      (void)t;
      if (r == memory.none_state)
        color[id] = top + 1;
      else if (inc[static_cast<std::size_t>(b)])
        color[id] = top;
      else
        color[id] = sub.game.coloring.at(b);
    }
    return analyze_parity(explorer, color, player);
  }

  const int d = game.streett.pair_count;
  MemoryStructure open_memory = build_open_request_memory(sub.game.arena, sub.game.streett);
  explorer.reduction = &open_memory;
  if (!explorer.run(region)) return VerifyResult::reject(explorer.error);
  std::vector<std::vector<char>> inc;
  for (int c = 0; c < d; ++c) inc.push_back(increment_vertices(sub.game.arena, c));
  std::vector<std::uint32_t> req(explorer.nodes.size(), 0), resp(explorer.nodes.size(), 0);
  for (std::size_t id = 0; id < explorer.nodes.size(); ++id) {
    auto [b, r, t] = explorer.nodes[id];
    (void)t;
    std::uint32_t open = static_cast<std::uint32_t>(r);
    for (int c = 0; c < d; ++c) {
      bool not_open = ((open >> c) & 1u) == 0;
      if (sub.game.streett.requests(b, c)) req[id] |= 1u << c;
      if (sub.game.streett.responds(b, c) || not_open) resp[id] |= 1u << c;
      if (inc[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)]) req[id] |= 1u << (d + c);
      if (not_open) resp[id] |= 1u << (d + c);
    }
  }
  return analyze_streett(explorer, req, resp, 2 * d, player);
}

}  // namespace

VerifyResult verify_parity_strategy(const Arena& arena, const ParityColoring& coloring,
                                    const PositionalStrategy& strategy,
                                    const std::vector<int>& region) {
  Game game;
  game.arena = arena;
  game.kind = GameKind::Parity;
  game.variant = Variant::Classical;
  game.coloring = coloring;
  return verify_classical_strategy(game, strategy, region, strategy.player);
}

VerifyResult verify_classical_strategy(const Game& game, const Strategy& strategy,
                                       const std::vector<int>& region, int player) {
  StrategyView view = view_of(strategy);
  if (!view.positional && !view.finite)
    return VerifyResult::reject("no finite strategy to verify");
  if (view.player != player) return VerifyResult::reject("strategy declared for the other player");

  Explorer explorer;
  explorer.base = &game.arena;
  explorer.player = player;
  explorer.positional = view.positional;
  explorer.finite = view.finite;
  // The classical conditions are prefix-independent: consistent plays must
  // never leave the claimed region.
  std::vector<char> confine = to_mask(game.arena.vertex_count(), region);
  explorer.confine = &confine;

  if (!explorer.run(region)) return VerifyResult::reject(explorer.error);

  if (game.kind == GameKind::Parity) {
    std::vector<int> color(explorer.nodes.size());
    for (std::size_t id = 0; id < explorer.nodes.size(); ++id)
      color[id] = game.coloring.at(explorer.nodes[id][0]);
    return analyze_parity(explorer, color, player);
  }
  std::vector<std::uint32_t> req(explorer.nodes.size(), 0), resp(explorer.nodes.size(), 0);
  for (std::size_t id = 0; id < explorer.nodes.size(); ++id) {
    int b = explorer.nodes[id][0];
    req[id] = game.streett.request_mask[static_cast<std::size_t>(b)];
    resp[id] = game.streett.response_mask[static_cast<std::size_t>(b)];
  }
  return analyze_streett(explorer, req, resp, game.streett.pair_count, player);
}

VerifyResult verify_bounded_strategy(const Game& game, const Strategy& strategy,
                                     const std::vector<int>& region, int player) {
  return verify_bounded_impl(game, strategy, region, player, false, nullptr);
}

VerifyResult verify_bounded_strategy_on_subdivision(const Game& game, const Strategy& strategy,
                                                    const std::vector<int>& region, int player) {
  return verify_bounded_impl(game, strategy, region, player, true, nullptr);
}

VerifyResult verify_layered_certificate(const Game& game, const LayeredCertificate& certificate,
                                        const std::vector<int>& region0) {
  const int n = game.arena.vertex_count();
  std::vector<char> claimed = to_mask(n, region0);
  std::vector<char> covered(static_cast<std::size_t>(n), 0);

  for (std::size_t j = 0; j < certificate.layers.size(); ++j) {
    const CertificateLayer& layer = certificate.layers[j];
    std::vector<char> in_x = to_mask(n, layer.x);
    std::vector<char> in_attr = to_mask(n, layer.attr);
    for (int v : layer.x)
      if (!in_attr[static_cast<std::size_t>(v)])
        return VerifyResult::reject("layer " + std::to_string(j + 1) + ": x not inside attr");
    for (int v : layer.attr) {
      if (covered[static_cast<std::size_t>(v)])
        return VerifyResult::reject("layer " + std::to_string(j + 1) + ": overlaps earlier layer");
      if (!claimed[static_cast<std::size_t>(v)])
        return VerifyResult::reject("layer " + std::to_string(j + 1) + ": outside claimed region");
    }

    // Trap discipline: Player 1 leaves x only toward earlier layers; inside
    // the attractor every step decreases the rank.
    for (int v : layer.attr) {
      const bool in_core = in_x[static_cast<std::size_t>(v)];
      const int rank = layer.rank[static_cast<std::size_t>(v)];
      if (rank < 0 || (in_core && rank != 0) || (!in_core && rank == 0))
        return VerifyResult::reject("layer " + std::to_string(j + 1) + ": bad rank at " +
                                    game.arena.name(v));
      if (game.arena.owner[static_cast<std::size_t>(v)] == 1) {
        for (int w : game.arena.successors(v)) {
          if (covered[static_cast<std::size_t>(w)]) continue;  // earlier layer
          bool ok = in_core ? in_x[static_cast<std::size_t>(w)]
                            : (in_attr[static_cast<std::size_t>(w)] &&
                               layer.rank[static_cast<std::size_t>(w)] < rank);
          if (!ok)
            return VerifyResult::reject("layer " + std::to_string(j + 1) +
                                        ": Player 1 escapes via " + game.arena.name(v) + " -> " +
                                        game.arena.name(w));
        }
      } else if (!in_core) {
        int t = layer.attractor_moves.next[static_cast<std::size_t>(v)];
        if (t < 0 || !in_attr[static_cast<std::size_t>(t)] ||
            layer.rank[static_cast<std::size_t>(t)] >= rank ||
            game.arena.edge_between(v, t) < 0)
          return VerifyResult::reject("layer " + std::to_string(j + 1) +
                                      ": attractor move at " + game.arena.name(v) +
                                      " does not decrease rank");
      }
    }

    // The layer's bounded strategy wins its subgame from x, confined to x.
    Subgame subgame = remove_region(game, to_sorted_list(covered));
    std::vector<int> to_sub(static_cast<std::size_t>(n), -1);
    for (std::size_t s = 0; s < subgame.origin.size(); ++s)
      to_sub[static_cast<std::size_t>(subgame.origin[s])] = static_cast<int>(s);
    std::vector<int> x_sub;
    for (int v : layer.x) x_sub.push_back(to_sub[static_cast<std::size_t>(v)]);
    std::vector<char> confine_sub(subgame.origin.size(), 0);
    for (int v : x_sub) confine_sub[static_cast<std::size_t>(v)] = 1;

    VerifyResult layer_check;
    if (layer.bounded_fs.has_value()) {
      FiniteStateStrategy fs = *layer.bounded_fs;
      layer_check =
          verify_bounded_impl(subgame.game, fs, x_sub, 0, /*strategy_subdivided=*/true,
                              &confine_sub);
    } else {
      PositionalStrategy mapped;
      mapped.player = 0;
      mapped.next.assign(subgame.origin.size(), -1);
      for (int v : layer.x) {
        int move = layer.bounded.next[static_cast<std::size_t>(v)];
        if (move >= 0)
          mapped.next[static_cast<std::size_t>(to_sub[static_cast<std::size_t>(v)])] =
              to_sub[static_cast<std::size_t>(move)];
      }
      layer_check = verify_bounded_impl(subgame.game, mapped, x_sub, 0,
                                        /*strategy_subdivided=*/false, &confine_sub);
    }
    if (!layer_check.ok) {
      layer_check.reason = "layer " + std::to_string(j + 1) + ": " + layer_check.reason;
      // Counterexamples are in subgame coordinates; lift them.
      if (layer_check.counterexample) {
        for (int& v : layer_check.counterexample->prefix)
          v = subgame.origin[static_cast<std::size_t>(v)];
        for (int& v : layer_check.counterexample->cycle)
          v = subgame.origin[static_cast<std::size_t>(v)];
      }
      return layer_check;
    }

    for (int v : layer.attr) covered[static_cast<std::size_t>(v)] = 1;
  }

  if (covered != claimed)
    return VerifyResult::reject("layers do not cover the claimed region");
  return VerifyResult::accept();
}

VerifyResult verify_strategy(const Game& game, const Strategy& strategy,
                             const std::vector<int>& region, int player) {
  if (std::holds_alternative<InfiniteMemoryStrategy>(strategy))
    return VerifyResult::reject("infinite-memory strategies are exercised by the spoiler, not verified");
  if (const auto* layered = std::get_if<LayeredCertificate>(&strategy)) {
    if (game.variant != Variant::Cost)
      return VerifyResult::reject("layered certificates belong to the cost variant");
    if (player != 0) return VerifyResult::reject("layered certificates are Player-0 evidence");
    return verify_layered_certificate(game, *layered, region);
  }
  switch (game.variant) {
    case Variant::Classical:
      return verify_classical_strategy(game, strategy, region, player);
    case Variant::BoundedCost:
      return verify_bounded_strategy(game, strategy, region, player);
    case Variant::Cost:
      return VerifyResult::reject(
          player == 0 ? "cost-variant Player-0 strategies are verified as layered certificates"
                      : "cost-variant Player 1 needs infinite memory; use the spoiler");
  }
  return VerifyResult::reject("unknown variant");
}

namespace {

struct ChoiceSpace {
  std::vector<int> vertices;
  std::vector<std::vector<int>> options;
  std::vector<std::size_t> pick;

  bool exhausted = false;

  std::int64_t count(std::int64_t budget) const {
    std::int64_t total = 1;
    for (const auto& opts : options) {
      total *= static_cast<std::int64_t>(opts.size());
      if (total > budget) return -1;
    }
    return total;
  }

  void assign(PositionalStrategy& strategy) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      strategy.next[static_cast<std::size_t>(vertices[i])] = options[i][pick[i]];
  }

  bool advance() {
    for (std::size_t i = 0; i < pick.size(); ++i) {
      if (++pick[i] < options[i].size()) return true;
      pick[i] = 0;
    }
    exhausted = true;
    return false;
  }
};

ChoiceSpace choices_for(const Arena& arena, int player) {
  ChoiceSpace space;
  for (int v = 0; v < arena.vertex_count(); ++v) {
    if (arena.owner[static_cast<std::size_t>(v)] != player) continue;
    space.vertices.push_back(v);
    space.options.push_back(arena.successors(v));
  }
  space.pick.assign(space.vertices.size(), 0);
  return space;
}

}  // namespace

std::vector<int> parity_oracle_enumerate(const Arena& arena, const ParityColoring& coloring,
                                         std::int64_t budget) {
  if (budget <= 0) budget = default_state_budget();
  ChoiceSpace space = choices_for(arena, 0);
  if (space.count(budget) < 0)
    throw std::runtime_error("parity oracle: strategy space exceeds the budget");

  std::vector<char> winning(static_cast<std::size_t>(arena.vertex_count()), 0);
  PositionalStrategy strategy;
  strategy.player = 0;
  strategy.next.assign(static_cast<std::size_t>(arena.vertex_count()), -1);
  do {
    space.assign(strategy);
    std::vector<char> losing =
        cycle_parity_reachable(restrict_by_strategy(arena, strategy), coloring.color, 1);
    for (int v = 0; v < arena.vertex_count(); ++v)
      if (!losing[static_cast<std::size_t>(v)]) winning[static_cast<std::size_t>(v)] = 1;
  } while (space.advance());
  return to_sorted_list(winning);
}

ParitySolution parity_oracle_solve(const Arena& arena, const ParityColoring& coloring,
                                   std::int64_t budget) {
  if (budget <= 0) budget = default_state_budget();
  ParitySolution solution;
  solution.winner.assign(static_cast<std::size_t>(arena.vertex_count()), 1);
  for (int v : parity_oracle_enumerate(arena, coloring, budget))
    solution.winner[static_cast<std::size_t>(v)] = 0;

  // A uniform positional strategy exists on each region; scan for it.
  for (int player = 0; player < 2; ++player) {
    const int hostile = player == 0 ? 1 : 0;
    std::vector<int> region = solution.region(player);
    PositionalStrategy& strategy = player == 0 ? solution.strategy0 : solution.strategy1;
    strategy.player = player;
    strategy.next.assign(static_cast<std::size_t>(arena.vertex_count()), -1);
    if (region.empty()) continue;
    ChoiceSpace space = choices_for(arena, player);
    if (space.count(budget) < 0)
      throw std::runtime_error("parity oracle: strategy space exceeds the budget");
    bool found = false;
    do {
      space.assign(strategy);
      std::vector<char> losing =
          cycle_parity_reachable(restrict_by_strategy(arena, strategy), coloring.color, hostile);
      found = true;
      for (int v : region)
        if (losing[static_cast<std::size_t>(v)]) {
          found = false;
          break;
        }
    } while (!found && space.advance());
    if (!found)
      throw std::logic_error("parity oracle: no uniform positional strategy found");
    for (int v = 0; v < arena.vertex_count(); ++v)
      if (solution.winner[static_cast<std::size_t>(v)] != player)
        strategy.next[static_cast<std::size_t>(v)] = -1;
  }
  return solution;
}

ParityBackend enumeration_backend(std::int64_t budget) {
  return [budget](const Arena& arena, const ParityColoring& coloring) {
    return parity_oracle_solve(arena, coloring, budget);
  };
}

StreettRegions streett_oracle_enumerate(const Arena& arena, const StreettSpec& spec,
                                        std::int64_t budget) {
  if (budget <= 0) budget = default_state_budget();
  ChoiceSpace space = choices_for(arena, 1);
  if (space.count(budget) < 0)
    throw std::runtime_error("streett oracle: strategy space exceeds the budget");

  std::vector<std::uint32_t> req = spec.request_mask;
  std::vector<std::uint32_t> resp = spec.response_mask;
  std::vector<char> all(static_cast<std::size_t>(arena.vertex_count()), 1);
  std::vector<char> player1_wins(static_cast<std::size_t>(arena.vertex_count()), 0);
  PositionalStrategy strategy;
  strategy.player = 1;
  strategy.next.assign(static_cast<std::size_t>(arena.vertex_count()), -1);
  do {
    space.assign(strategy);
    std::vector<std::vector<int>> succ = restrict_by_strategy(arena, strategy);
    std::vector<char> good = streett_good_vertices(succ, req, resp, spec.pair_count, all);
    // Player 1 wins wherever no satisfying cycle stays reachable.
    std::vector<char> reach_good(static_cast<std::size_t>(arena.vertex_count()), 0);
    {
      std::vector<std::vector<int>> pred(succ.size());
      for (std::size_t v = 0; v < succ.size(); ++v)
        for (int w : succ[v]) pred[static_cast<std::size_t>(w)].push_back(static_cast<int>(v));
      std::deque<int> queue;
      for (std::size_t v = 0; v < succ.size(); ++v)
        if (good[v]) {
          reach_good[v] = 1;
          queue.push_back(static_cast<int>(v));
        }
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : pred[static_cast<std::size_t>(v)])
          if (!reach_good[static_cast<std::size_t>(u)]) {
            reach_good[static_cast<std::size_t>(u)] = 1;
            queue.push_back(u);
          }
      }
    }
    for (int v = 0; v < arena.vertex_count(); ++v)
      if (!reach_good[static_cast<std::size_t>(v)]) player1_wins[static_cast<std::size_t>(v)] = 1;
  } while (space.advance());

  StreettRegions regions;
  regions.region1 = to_sorted_list(player1_wins);
  for (int v = 0; v < arena.vertex_count(); ++v)
    if (!player1_wins[static_cast<std::size_t>(v)]) regions.region0.push_back(v);
  return regions;
}

bool positional_strategies_insufficient(const Game& game, int player, int vertex,
                                        std::int64_t budget) {
  if (budget <= 0) budget = default_state_budget();
  ChoiceSpace space = choices_for(game.arena, player);
  if (space.count(budget) < 0)
    throw std::runtime_error("minimality check: strategy space exceeds the budget");

  do {
    Game restricted = game;
    restricted.arena.edges.clear();
    for (auto& adj : restricted.arena.out) adj.clear();
    for (auto& adj : restricted.arena.in) adj.clear();
    PositionalStrategy strategy;
    strategy.player = player;
    strategy.next.assign(static_cast<std::size_t>(game.arena.vertex_count()), -1);
    space.assign(strategy);
    for (const Edge& edge : game.arena.edges) {
      if (game.arena.owner[static_cast<std::size_t>(edge.src)] == player &&
          strategy.at(edge.src) != edge.dst)
        continue;
      restricted.arena.add_edge(edge.src, edge.dst, edge.cost);
    }

    std::vector<int> region;
    if (game.kind == GameKind::Parity) {
      switch (game.variant) {
        case Variant::Classical: {
          ParitySolution sol = solve_parity(restricted.arena, restricted.coloring);
          region = sol.region(player);
          break;
        }
        case Variant::BoundedCost: {
          BoundedCostSolution sol = solve_bounded_cost_parity(restricted);
          region = player == 0 ? sol.region0 : sol.region1;
          break;
        }
        case Variant::Cost: {
          CostParitySolution sol = solve_cost_parity(restricted);
          region = player == 0 ? sol.region0 : sol.region1;
          break;
        }
      }
    } else {
      switch (game.variant) {
        case Variant::Classical: {
          StreettSolution sol = solve_streett(restricted.arena, restricted.streett);
          region = player == 0 ? sol.region0 : sol.region1;
          break;
        }
        case Variant::BoundedCost: {
          BoundedCostStreettSolution sol = solve_bounded_cost_streett(restricted);
          region = player == 0 ? sol.region0 : sol.region1;
          break;
        }
        case Variant::Cost: {
          CostStreettSolution sol = solve_cost_streett(restricted);
          region = player == 0 ? sol.region0 : sol.region1;
          break;
        }
      }
    }
    if (std::find(region.begin(), region.end(), vertex) != region.end()) return false;
  } while (space.advance());
  return true;
}

}  // namespace costly
