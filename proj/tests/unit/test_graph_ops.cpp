#include <algorithm>
#include <set>

#include "costly/cost_parity.hpp"
#include "costly/graph_ops.hpp"
#include "costly/lasso.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace costly;
using testing::names_of;
using testing::sample_game;
using testing::vertices;

namespace {

// Brute-force oracle: enumerate simple cycles by DFS and check per start
// vertex whether one with an odd maximal color is reachable.
struct CycleOracle {
  const std::vector<std::vector<int>>& succ;
  const std::vector<int>& color;
  std::vector<char> anchor;

  CycleOracle(const std::vector<std::vector<int>>& s, const std::vector<int>& c)
      : succ(s), color(c), anchor(s.size(), 0) {
    std::vector<int> path;
    std::vector<char> on_path(s.size(), 0);
    for (std::size_t v = 0; v < s.size(); ++v) explore(static_cast<int>(v), path, on_path);
  }

  void explore(int v, std::vector<int>& path, std::vector<char>& on_path) {
    if (on_path[static_cast<std::size_t>(v)]) {
      int max_color = 0;
      for (auto it = std::find(path.begin(), path.end(), v); it != path.end(); ++it)
        max_color = std::max(max_color, color[static_cast<std::size_t>(*it)]);
      if (max_color % 2 == 1)
        for (auto it = std::find(path.begin(), path.end(), v); it != path.end(); ++it)
          anchor[static_cast<std::size_t>(*it)] = 1;
      return;
    }
    on_path[static_cast<std::size_t>(v)] = 1;
    path.push_back(v);
    for (int w : succ[static_cast<std::size_t>(v)]) explore(w, path, on_path);
    path.pop_back();
    on_path[static_cast<std::size_t>(v)] = 0;
  }

  std::vector<char> reachable() const {
    std::vector<std::vector<int>> pred(succ.size());
    for (std::size_t v = 0; v < succ.size(); ++v)
      for (int w : succ[v]) pred[static_cast<std::size_t>(w)].push_back(static_cast<int>(v));
    std::vector<char> reach = anchor;
    std::vector<int> stack;
    for (std::size_t v = 0; v < succ.size(); ++v)
      if (reach[v]) stack.push_back(static_cast<int>(v));
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : pred[static_cast<std::size_t>(v)])
        if (!reach[static_cast<std::size_t>(u)]) {
          reach[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
    }
    return reach;
  }
};

}  // namespace

TEST_CASE("attractor of the whole vertex set is everything") {
  Game game = sample_game();
  std::vector<int> all;
  for (int v = 0; v < game.arena.vertex_count(); ++v) all.push_back(v);
  CHECK(attractor(game.arena, 0, all).set == all);
  CHECK(attractor(game.arena, 0, {}).set.empty());
}

TEST_CASE("attractor on the sample game pulls f toward g") {
  Game game = sample_game();
  AttractorResult result = attractor(game.arena, 0, vertices(game, {"g"}));
  CHECK(names_of(game, result.set) == std::vector<std::string>{"f", "g"});
  CHECK(result.rank[static_cast<std::size_t>(game.arena.find_vertex("g"))] == 0);
  CHECK(result.rank[static_cast<std::size_t>(game.arena.find_vertex("f"))] == 1);
}

TEST_CASE("attractor properties on random games") {
  for (unsigned seed = 1; seed <= 50; ++seed) {
    Game game = testing::random_parity_game(seed);
    const int n = game.arena.vertex_count();
    std::vector<int> f, f_larger;
    for (int v = 0; v < n; ++v) {
      if ((seed + static_cast<unsigned>(v)) % 3 == 0) f.push_back(v);
      if ((seed + static_cast<unsigned>(v)) % 3 != 2) f_larger.push_back(v);
    }
    for (int player : {0, 1}) {
      AttractorResult small = attractor(game.arena, player, f);
      AttractorResult large = attractor(game.arena, player, f_larger);
      // monotone and extensive
      CHECK(std::includes(small.set.begin(), small.set.end(), f.begin(), f.end()));
      CHECK(std::includes(large.set.begin(), large.set.end(), small.set.begin(), small.set.end()));
      // idempotent
      CHECK(attractor(game.arena, player, small.set).set == small.set);
      // the complement is a trap for the attracting player
      std::vector<int> complement;
      std::vector<char> in_set = to_mask(n, small.set);
      for (int v = 0; v < n; ++v)
        if (!in_set[static_cast<std::size_t>(v)]) complement.push_back(v);
      CHECK(is_trap(game.arena, player, complement));
      // strategy edges decrease the rank
      for (int v : small.set)
        if (small.strategy.defined(v))
          CHECK(small.rank[static_cast<std::size_t>(small.strategy.at(v))] <
                small.rank[static_cast<std::size_t>(v)]);
    }
  }
}

TEST_CASE("traps on the sample game") {
  Game game = sample_game();
  std::vector<int> all;
  for (int v = 0; v < game.arena.vertex_count(); ++v) all.push_back(v);
  CHECK(is_trap(game.arena, 0, all));
  CHECK(is_trap(game.arena, 0, vertices(game, {"b"})));
  CHECK_FALSE(is_trap(game.arena, 1, vertices(game, {"a"})));
}

TEST_CASE("remove_region keeps the arena well-formed") {
  Game game = sample_game();
  Subgame identity = remove_region(game, {});
  CHECK(identity.game.arena.vertex_count() == game.arena.vertex_count());
  CHECK(identity.game.arena.edge_count() == game.arena.edge_count());

  AttractorResult att = attractor(game.arena, 0, vertices(game, {"g"}));
  Subgame sub = remove_region(game, att.set);
  CHECK(names_of(sub.game, {0, 1, 2, 3, 4}) ==
        std::vector<std::string>{"a", "b", "c", "d", "e"});
  CHECK(validate_game(sub.game).empty());

  // removing a non-attractor that strands a vertex is rejected
  CHECK_THROWS_AS(remove_region(game, vertices(game, {"g"})), std::invalid_argument);
}

TEST_CASE("removing random attractors keeps arenas valid") {
  for (unsigned seed = 1; seed <= 50; ++seed) {
    Game game = testing::random_parity_game(seed);
    std::vector<int> f;
    for (int v = 0; v < game.arena.vertex_count(); ++v)
      if ((seed + static_cast<unsigned>(v)) % 4 == 0) f.push_back(v);
    AttractorResult att = attractor(game.arena, 0, f);
    if (att.set.size() == static_cast<std::size_t>(game.arena.vertex_count())) continue;
    Subgame sub = remove_region(game, att.set);
    CHECK(validate_game(sub.game).empty());
  }
}

TEST_CASE("subdivision splits exactly the increment edges") {
  Game game = sample_game();
  Subdivision sub = subdivide(game);
  CHECK(sub.game.arena.vertex_count() == game.arena.vertex_count() + 3);
  CHECK(validate_game(sub.game).empty());
  // colors copied from the edge targets
  for (int v = game.arena.vertex_count(); v < sub.game.arena.vertex_count(); ++v) {
    int e = sub.edge_of_sub[static_cast<std::size_t>(v)];
    CHECK(sub.game.coloring.at(v) == game.coloring.at(game.arena.edges[static_cast<std::size_t>(e)].dst));
    CHECK(sub.game.arena.owner[static_cast<std::size_t>(v)] == 1);
  }
  // all-epsilon arenas stay untouched
  Game free_game = testing::random_parity_game(7, 5, 3, Variant::Classical, 0.0);
  Subdivision unchanged = subdivide(free_game);
  CHECK(unchanged.game.arena.vertex_count() == free_game.arena.vertex_count());
  CHECK(unchanged.game.arena.edge_count() == free_game.arena.edge_count());
}

TEST_CASE("subdivision separates incoming edge kinds per dimension") {
  for (unsigned seed = 1; seed <= 30; ++seed) {
    Game game = testing::random_streett_game(seed, 5, 2, Variant::BoundedCost);
    Subdivision sub = subdivide(game);
    const Arena& arena = sub.game.arena;
    for (int dim = 0; dim < arena.cost_dimension; ++dim) {
      for (int v = 0; v < arena.vertex_count(); ++v) {
        bool has_inc = false, has_eps = false;
        for (int e : arena.in[static_cast<std::size_t>(v)]) {
          if (is_increment(arena.edges[static_cast<std::size_t>(e)].cost, dim))
            has_inc = true;
          else
            has_eps = true;
        }
        CHECK_FALSE((has_inc && has_eps));
      }
    }
  }
}

TEST_CASE("one-state memory product is isomorphic to the arena") {
  Game game = sample_game();
  MemoryStructure trivial;
  trivial.state_names = {"m"};
  trivial.init.assign(static_cast<std::size_t>(game.arena.vertex_count()), 0);
  trivial.update = {std::vector<int>(static_cast<std::size_t>(game.arena.vertex_count()), 0)};
  Product product = build_product(game.arena, trivial, false);
  CHECK(product.arena.vertex_count() == game.arena.vertex_count());
  CHECK(product.arena.edge_count() == game.arena.edge_count());
}

TEST_CASE("request-memory product of the sample game stays within |V| * |M|") {
  Game game = sample_game();
  RequestMemory memory = build_request_memory(game.arena, game.coloring);
  CHECK(memory.structure.state_count() == 2);  // one odd color
  Product product = build_product(game.arena, memory.structure, false);
  CHECK(product.arena.vertex_count() <= game.arena.vertex_count() * 2);
}

TEST_CASE("extended plays follow the memory") {
  Game game = sample_game();
  RequestMemory memory = build_request_memory(game.arena, game.coloring);
  Product product = build_product(game.arena, memory.structure, false);
  Lasso base;
  base.prefix = vertices(game, {"a"});
  base.cycle = vertices(game, {"b", "c", "a"});
  Lasso extended = extend_lasso(product, memory.structure, base);
  check_lasso(product.arena, extended);
  // stepping the memory along the play matches the product components
  std::vector<int> flat = base.prefix;
  int state = memory.structure.init[static_cast<std::size_t>(flat.front())];
  std::size_t pos = 0;
  auto expect = [&](int product_vertex) {
    auto [v, m] = product.vm[static_cast<std::size_t>(product_vertex)];
    CHECK(v == flat[pos]);
    CHECK(m == state);
  };
  for (int rounds = 0; rounds < 3; ++rounds)
    for (int v : base.cycle) flat.push_back(v);
  for (int id : extended.prefix) {
    expect(id);
    ++pos;
    state = memory.structure.run(state, flat[pos]);
  }
}

TEST_CASE("product preserves lasso winners under the pcrr reduction") {
  for (unsigned seed = 1; seed <= 40; ++seed) {
    Game game = testing::random_parity_game(seed, 5, 3, Variant::BoundedCost, 0.4);
    Subdivision sub = subdivide(game);
    RequestMemory memory = build_request_memory(sub.game.arena, sub.game.coloring);
    Product product = build_product(sub.game.arena, memory.structure, false);
    std::vector<int> colors =
        pcrr_coloring(product, sub.game.coloring, increment_vertices(sub.game.arena, 0), memory,
                      sub.game.coloring.top_odd());
    ParityColoring product_coloring{colors};

    for (int start = 0; start < sub.game.arena.vertex_count(); ++start) {
      // walk a lasso in the subdivided arena
      std::vector<int> walk{start};
      std::vector<int> seen(static_cast<std::size_t>(sub.game.arena.vertex_count()), -1);
      seen[static_cast<std::size_t>(start)] = 0;
      int at = start;
      Lasso lasso;
      for (;;) {
        auto succ = sub.game.arena.successors(at);
        at = succ[(seed + walk.size()) % succ.size()];
        if (seen[static_cast<std::size_t>(at)] >= 0) {
          int cut = seen[static_cast<std::size_t>(at)];
          lasso.prefix.assign(walk.begin(), walk.begin() + cut);
          lasso.cycle.assign(walk.begin() + cut, walk.end());
          break;
        }
        seen[static_cast<std::size_t>(at)] = static_cast<int>(walk.size());
        walk.push_back(at);
      }
      int direct = eval_condition_lasso(sub.game, lasso, Variant::BoundedCost);
      Lasso extended = extend_lasso(product, memory.structure, lasso);
      int reduced = eval_parity_lasso(product.arena, product_coloring, extended);
      CHECK(direct == reduced);
    }
  }
}

TEST_CASE("cycle analysis agrees with brute-force enumeration") {
  Arena loop_even;
  loop_even.add_vertex("v", 0);
  loop_even.add_edge(0, 0);
  std::vector<std::vector<int>> succ{{0}};
  CHECK(cycle_parity_reachable(succ, {0}, 1) == std::vector<char>{0});
  CHECK(cycle_parity_reachable(succ, {1}, 1) == std::vector<char>{1});

  for (unsigned seed = 1; seed <= 80; ++seed) {
    Game game = testing::random_parity_game(seed, 6, 4);
    std::vector<std::vector<int>> graph(static_cast<std::size_t>(game.arena.vertex_count()));
    for (int v = 0; v < game.arena.vertex_count(); ++v) {
      // drop some edges to vary the shape
      for (int w : game.arena.successors(v))
        if ((static_cast<unsigned>(v + w) + seed) % 5 != 0)
          graph[static_cast<std::size_t>(v)].push_back(w);
    }
    CycleOracle oracle(graph, game.coloring.color);
    CHECK(cycle_parity_reachable(graph, game.coloring.color, 1) == oracle.reachable());
  }
}
