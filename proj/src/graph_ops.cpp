#include "costly/graph_ops.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "costly/lasso.hpp"

namespace costly {

AttractorResult attractor(const Arena& arena, int player, const std::vector<int>& target,
                          const std::vector<char>& alive) {
  const int n = arena.vertex_count();
  std::vector<char> live = alive.empty() ? std::vector<char>(static_cast<std::size_t>(n), 1) : alive;

  AttractorResult result;
  result.in_set.assign(static_cast<std::size_t>(n), 0);
  result.rank.assign(static_cast<std::size_t>(n), -1);
  result.strategy.player = player;
  result.strategy.next.assign(static_cast<std::size_t>(n), -1);

  for (int v : target) {
    if (v < 0 || v >= n) throw std::invalid_argument("attractor: unknown vertex in target");
    if (!live[static_cast<std::size_t>(v)]) continue;
    result.in_set[static_cast<std::size_t>(v)] = 1;
    result.rank[static_cast<std::size_t>(v)] = 0;
  }

  // Round-by-round fixpoint; each round is evaluated against the previous
  // round's set so ranks match the inductive construction.
  for (int round = 1;; ++round) {
    std::vector<int> added;
    for (int v = 0; v < n; ++v) {
      if (!live[static_cast<std::size_t>(v)] || result.in_set[static_cast<std::size_t>(v)]) continue;
      bool attract;
      if (arena.owner[static_cast<std::size_t>(v)] == player) {
        attract = false;
        for (int e : arena.out[static_cast<std::size_t>(v)]) {
          int w = arena.edges[static_cast<std::size_t>(e)].dst;
          if (live[static_cast<std::size_t>(w)] && result.in_set[static_cast<std::size_t>(w)]) {
            attract = true;
            break;
          }
        }
      } else {
        attract = true;
        bool any_live = false;
        for (int e : arena.out[static_cast<std::size_t>(v)]) {
          int w = arena.edges[static_cast<std::size_t>(e)].dst;
          if (!live[static_cast<std::size_t>(w)]) continue;
          any_live = true;
          if (!result.in_set[static_cast<std::size_t>(w)]) {
            attract = false;
            break;
          }
        }
        if (!any_live) attract = false;
      }
      if (attract) added.push_back(v);
    }
    if (added.empty()) break;
    for (int v : added) {
      result.in_set[static_cast<std::size_t>(v)] = 1;
      result.rank[static_cast<std::size_t>(v)] = round;
      if (arena.owner[static_cast<std::size_t>(v)] == player) {
        for (int e : arena.out[static_cast<std::size_t>(v)]) {
          int w = arena.edges[static_cast<std::size_t>(e)].dst;
          if (live[static_cast<std::size_t>(w)] && result.rank[static_cast<std::size_t>(w)] >= 0 &&
              result.rank[static_cast<std::size_t>(w)] < round) {
            result.strategy.next[static_cast<std::size_t>(v)] = w;
            break;
          }
        }
      }
    }
  }
  result.set = to_sorted_list(result.in_set);
  return result;
}

bool is_trap(const Arena& arena, int player, const std::vector<int>& xs) {
  std::vector<char> mask = to_mask(arena.vertex_count(), xs);
  for (int v : xs) {
    bool has_inside = false;
    bool all_inside = true;
    for (int w : arena.successors(v)) {
      if (mask[static_cast<std::size_t>(w)])
        has_inside = true;
      else
        all_inside = false;
    }
    if (arena.owner[static_cast<std::size_t>(v)] == player) {
      if (!all_inside) return false;
    } else {
      if (!has_inside) return false;
    }
  }
  return true;
}

Subgame remove_region(const Game& game, const std::vector<int>& removed) {
  const Arena& arena = game.arena;
  std::vector<char> gone = to_mask(arena.vertex_count(), removed);

  Subgame result;
  result.game.kind = game.kind;
  result.game.variant = game.variant;
  result.game.arena.cost_dimension = arena.cost_dimension;
  result.game.streett.pair_count = game.streett.pair_count;

  std::vector<int> to_new(static_cast<std::size_t>(arena.vertex_count()), -1);
  for (int v = 0; v < arena.vertex_count(); ++v) {
    if (gone[static_cast<std::size_t>(v)]) continue;
    int nv = result.game.arena.add_vertex(arena.name(v), arena.owner[static_cast<std::size_t>(v)]);
    to_new[static_cast<std::size_t>(v)] = nv;
    result.origin.push_back(v);
    if (game.kind == GameKind::Parity)
      result.game.coloring.color.push_back(game.coloring.at(v));
    else {
      result.game.streett.request_mask.push_back(game.streett.request_mask[static_cast<std::size_t>(v)]);
      result.game.streett.response_mask.push_back(game.streett.response_mask[static_cast<std::size_t>(v)]);
    }
  }
  for (const Edge& edge : arena.edges) {
    int s = to_new[static_cast<std::size_t>(edge.src)];
    int d = to_new[static_cast<std::size_t>(edge.dst)];
    if (s >= 0 && d >= 0) result.game.arena.add_edge(s, d, edge.cost);
  }
  for (int v = 0; v < result.game.arena.vertex_count(); ++v)
    if (result.game.arena.out[static_cast<std::size_t>(v)].empty())
      throw std::invalid_argument("remove_region: vertex " + result.game.arena.name(v) +
                                  " would become terminal");
  return result;
}

Subdivision subdivide(const Game& game) {
  const Arena& arena = game.arena;
  Subdivision result;
  result.game.kind = game.kind;
  result.game.variant = game.variant;
  result.game.arena.cost_dimension = arena.cost_dimension;
  result.game.streett.pair_count = game.streett.pair_count;
  result.sub_of_edge.assign(static_cast<std::size_t>(arena.edge_count()), -1);

  std::set<std::string> used(arena.names.begin(), arena.names.end());

  Arena& out = result.game.arena;
  for (int v = 0; v < arena.vertex_count(); ++v) {
    out.add_vertex(arena.name(v), arena.owner[static_cast<std::size_t>(v)]);
    result.origin_vertex.push_back(v);
    result.edge_of_sub.push_back(-1);
    if (game.kind == GameKind::Parity)
      result.game.coloring.color.push_back(game.coloring.at(v));
    else {
      result.game.streett.request_mask.push_back(game.streett.request_mask[static_cast<std::size_t>(v)]);
      result.game.streett.response_mask.push_back(game.streett.response_mask[static_cast<std::size_t>(v)]);
    }
  }
  const CostLabel free_label(static_cast<std::size_t>(arena.cost_dimension), 'e');
  for (int e = 0; e < arena.edge_count(); ++e) {
    const Edge& edge = arena.edges[static_cast<std::size_t>(e)];
    if (all_epsilon(edge.cost)) {
      out.add_edge(edge.src, edge.dst, edge.cost);
      continue;
    }
    std::string name = "sub:" + arena.name(edge.src) + ">" + arena.name(edge.dst);
    while (used.count(name)) name += "'";
    used.insert(name);
    int sub = out.add_vertex(name, 1);
    result.origin_vertex.push_back(-1);
    result.edge_of_sub.push_back(e);
    result.sub_of_edge[static_cast<std::size_t>(e)] = sub;
    if (game.kind == GameKind::Parity)
      result.game.coloring.color.push_back(game.coloring.at(edge.dst));
    else {
      result.game.streett.request_mask.push_back(0);
      result.game.streett.response_mask.push_back(0);
    }
    out.add_edge(edge.src, sub, edge.cost);
    out.add_edge(sub, edge.dst, free_label);
  }
  return result;
}

Product build_product(const Arena& base, const MemoryStructure& memory, bool full) {
  const int n = base.vertex_count();
  const int m = memory.state_count();
  Product product;
  product.at.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m), -1));
  product.arena.cost_dimension = base.cost_dimension;

  auto intern = [&](int v, int s) {
    int& slot = product.at[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
    if (slot < 0) {
      slot = product.arena.add_vertex(base.name(v) + "@" + memory.state_names[static_cast<std::size_t>(s)],
                                      base.owner[static_cast<std::size_t>(v)]);
      product.vm.emplace_back(v, s);
    }
    return slot;
  };

  std::deque<int> queue;
  if (full) {
    for (int v = 0; v < n; ++v)
      for (int s = 0; s < m; ++s) queue.push_back(intern(v, s));
  } else {
    for (int v = 0; v < n; ++v) queue.push_back(intern(v, memory.init[static_cast<std::size_t>(v)]));
  }

  std::vector<char> expanded;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    if (static_cast<std::size_t>(q) < expanded.size() && expanded[static_cast<std::size_t>(q)]) continue;
    if (static_cast<std::size_t>(q) >= expanded.size()) expanded.resize(static_cast<std::size_t>(q) + 1, 0);
    expanded[static_cast<std::size_t>(q)] = 1;
    auto [v, s] = product.vm[static_cast<std::size_t>(q)];
    for (int e : base.out[static_cast<std::size_t>(v)]) {
      const Edge& edge = base.edges[static_cast<std::size_t>(e)];
      int s2 = memory.run(s, edge.dst);
      int q2 = product.at[static_cast<std::size_t>(edge.dst)][static_cast<std::size_t>(s2)];
      if (q2 < 0) {
        q2 = intern(edge.dst, s2);
        queue.push_back(q2);
      }
      product.arena.add_edge(q, q2, edge.cost);
    }
  }
  return product;
}

Lasso extend_lasso(const Product& product, const MemoryStructure& memory, const Lasso& base) {
  auto at = [&](std::pair<int, int> vm) {
    int q = product.at[static_cast<std::size_t>(vm.first)][static_cast<std::size_t>(vm.second)];
    if (q < 0) throw std::logic_error("extend_lasso: product state missing");
    return q;
  };

  // Walk the play tracking (vertex, memory after it); unroll the cycle until
  // the memory recurs at the cycle head.
  std::vector<std::pair<int, int>> walk;
  auto push = [&](int v) {
    int s = walk.empty() ? memory.init[static_cast<std::size_t>(v)]
                         : memory.run(walk.back().second, v);
    walk.emplace_back(v, s);
  };
  for (int v : base.prefix) push(v);
  for (int k = 0; k <= memory.state_count(); ++k)
    for (int v : base.cycle) push(v);

  std::size_t lo = 0, hi = 0;
  bool found = false;
  for (std::size_t a = base.prefix.size(); a < walk.size() && !found; a += base.cycle.size())
    for (std::size_t b = a + base.cycle.size(); b < walk.size(); b += base.cycle.size())
      if (walk[a].second == walk[b].second) {
        lo = a;
        hi = b;
        found = true;
        break;
      }
  if (!found) throw std::logic_error("extend_lasso: memory never recurred");

  Lasso extended;
  for (std::size_t i = 0; i < lo; ++i) extended.prefix.push_back(at(walk[i]));
  for (std::size_t i = lo; i < hi; ++i) extended.cycle.push_back(at(walk[i]));
  return extended;
}

std::vector<std::vector<int>> restrict_by_strategy(const Arena& arena,
                                                   const PositionalStrategy& strategy) {
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(arena.vertex_count()));
  for (int v = 0; v < arena.vertex_count(); ++v) {
    if (arena.owner[static_cast<std::size_t>(v)] == strategy.player) {
      if (strategy.defined(v)) succ[static_cast<std::size_t>(v)].push_back(strategy.at(v));
    } else {
      succ[static_cast<std::size_t>(v)] = arena.successors(v);
    }
  }
  return succ;
}

namespace {

// Iterative Tarjan restricted to `alive`.
struct SccFinder {
  const std::vector<std::vector<int>>& succ;
  const std::vector<char>& alive;
  std::vector<int> index, low, comp;
  std::vector<char> on_stack;
  std::vector<int> stack;
  int counter = 0, comp_count = 0;

  SccFinder(const std::vector<std::vector<int>>& s, const std::vector<char>& a)
      : succ(s), alive(a) {
    index.assign(succ.size(), -1);
    low.assign(succ.size(), 0);
    comp.assign(succ.size(), -1);
    on_stack.assign(succ.size(), 0);
  }

  void run(int root) {
    struct Frame {
      int v;
      std::size_t next_child;
    };
    std::vector<Frame> frames{{root, 0}};
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    while (!frames.empty()) {
      Frame& frame = frames.back();
      int v = frame.v;
      if (frame.next_child < succ[static_cast<std::size_t>(v)].size()) {
        int w = succ[static_cast<std::size_t>(v)][frame.next_child++];
        if (!alive[static_cast<std::size_t>(w)]) continue;
        if (index[static_cast<std::size_t>(w)] < 0) {
          index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] =
              std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
        }
      } else {
        if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(w)] = 0;
            comp[static_cast<std::size_t>(w)] = comp_count;
            if (w == v) break;
          }
          ++comp_count;
        }
        frames.pop_back();
        if (!frames.empty()) {
          int parent = frames.back().v;
          low[static_cast<std::size_t>(parent)] =
              std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
        }
      }
    }
  }

  void run_all() {
    for (std::size_t v = 0; v < succ.size(); ++v)
      if (alive[v] && index[v] < 0) run(static_cast<int>(v));
  }
};

}  // namespace

std::vector<std::vector<int>> nontrivial_sccs(const std::vector<std::vector<int>>& succ,
                                              const std::vector<char>& alive) {
  SccFinder finder(succ, alive);
  finder.run_all();
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(finder.comp_count));
  for (std::size_t v = 0; v < succ.size(); ++v)
    if (alive[v]) groups[static_cast<std::size_t>(finder.comp[v])].push_back(static_cast<int>(v));
  std::vector<std::vector<int>> result;
  for (auto& group : groups) {
    std::sort(group.begin(), group.end());
    bool internal_edge = false;
    for (int v : group) {
      for (int w : succ[static_cast<std::size_t>(v)])
        if (alive[static_cast<std::size_t>(w)] &&
            finder.comp[static_cast<std::size_t>(w)] == finder.comp[static_cast<std::size_t>(v)]) {
          internal_edge = true;
          break;
        }
      if (internal_edge) break;
    }
    if (internal_edge) result.push_back(std::move(group));
  }
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

// Anchors: color-c vertices (c of the hostile parity) lying in a nontrivial
// SCC of the subgraph of colors <= c.
std::vector<char> hostile_anchors(const std::vector<std::vector<int>>& succ,
                                  const std::vector<int>& color, int parity) {
  std::vector<char> anchor(succ.size(), 0);
  std::vector<int> colors_present;
  for (std::size_t v = 0; v < succ.size(); ++v)
    if (color[v] % 2 == parity &&
        std::find(colors_present.begin(), colors_present.end(), color[v]) == colors_present.end())
      colors_present.push_back(color[v]);
  std::sort(colors_present.begin(), colors_present.end());
  for (int c : colors_present) {
    std::vector<char> alive(succ.size(), 0);
    for (std::size_t v = 0; v < succ.size(); ++v) alive[v] = color[v] <= c;
    for (const auto& scc : nontrivial_sccs(succ, alive))
      for (int v : scc)
        if (color[static_cast<std::size_t>(v)] == c) anchor[static_cast<std::size_t>(v)] = 1;
  }
  return anchor;
}

std::vector<char> can_reach(const std::vector<std::vector<int>>& succ,
                            const std::vector<char>& targets) {
  std::vector<std::vector<int>> pred(succ.size());
  for (std::size_t v = 0; v < succ.size(); ++v)
    for (int w : succ[v]) pred[static_cast<std::size_t>(w)].push_back(static_cast<int>(v));
  std::vector<char> reach = targets;
  std::deque<int> queue;
  for (std::size_t v = 0; v < succ.size(); ++v)
    if (reach[v]) queue.push_back(static_cast<int>(v));
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : pred[static_cast<std::size_t>(v)])
      if (!reach[static_cast<std::size_t>(u)]) {
        reach[static_cast<std::size_t>(u)] = 1;
        queue.push_back(u);
      }
  }
  return reach;
}

// Shortest path start -> goal (BFS in vertex order); empty if unreachable.
// Returns the vertex sequence including both endpoints.
std::vector<int> bfs_path(const std::vector<std::vector<int>>& succ,
                          const std::vector<char>& alive, int start, int goal) {
  std::vector<int> parent(succ.size(), -2);
  std::deque<int> queue;
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

}  // namespace

std::vector<char> cycle_parity_reachable(const std::vector<std::vector<int>>& succ,
                                         const std::vector<int>& color, int parity) {
  return can_reach(succ, hostile_anchors(succ, color, parity));
}

std::optional<CycleWitness> find_parity_cycle(const std::vector<std::vector<int>>& succ,
                                              const std::vector<int>& color, int parity,
                                              int start) {
  std::vector<char> anchors = hostile_anchors(succ, color, parity);
  std::vector<char> all(succ.size(), 1);
  // Smallest reachable anchor, ties by BFS layer implicitly via vertex scan.
  for (std::size_t a = 0; a < anchors.size(); ++a) {
    if (!anchors[a]) continue;
    std::vector<int> path = bfs_path(succ, all, start, static_cast<int>(a));
    if (path.empty()) continue;
    int c = color[a];
    std::vector<char> alive(succ.size(), 0);
    for (std::size_t v = 0; v < succ.size(); ++v) alive[v] = color[v] <= c;
    // Cycle through the anchor within colors <= c: shortest way back.
    std::vector<int> cycle;
    if (std::find(succ[a].begin(), succ[a].end(), static_cast<int>(a)) != succ[a].end()) {
      cycle = {static_cast<int>(a)};
    } else {
      for (int w : succ[a]) {
        if (!alive[static_cast<std::size_t>(w)]) continue;
        std::vector<int> back = bfs_path(succ, alive, w, static_cast<int>(a));
        if (back.empty()) continue;
        cycle.push_back(static_cast<int>(a));
        for (std::size_t i = 0; i + 1 < back.size(); ++i) cycle.push_back(back[i]);
        break;
      }
    }
    if (cycle.empty()) continue;
    CycleWitness witness;
    witness.path.assign(path.begin(), path.end() - 1);
    witness.cycle = std::move(cycle);
    return witness;
  }
  return std::nullopt;
}

}  // namespace costly
