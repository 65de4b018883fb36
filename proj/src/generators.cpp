#include "costly/generators.hpp"

#include <random>
#include <stdexcept>

namespace costly {

Game make_lower_bound_parity_game(int d) {
  if (d < 1) throw std::invalid_argument("lower-bound parity game needs d >= 1");
  Game game;
  game.kind = GameKind::Parity;
  game.variant = Variant::BoundedCost;
  Arena& arena = game.arena;
  auto color = [&](int c) { game.coloring.color.push_back(c); };

  int hub = arena.add_vertex("hub", 0);
  color(0);
  for (int c = 1; c <= 2 * d - 1; c += 2) {
    int enter = arena.add_vertex("enter" + std::to_string(c), 1);
    color(c - 1);
    int answer = arena.add_vertex("answer" + std::to_string(c), 0);
    color(2 * d);
    int request = arena.add_vertex("request" + std::to_string(c), 0);
    color(c);
    arena.add_edge(hub, enter, "i");
    arena.add_edge(enter, enter, "i");
    arena.add_edge(enter, answer, "i");
    arena.add_edge(answer, request, "i");
    arena.add_edge(request, hub, "i");
  }
  return game;
}

Game make_lower_bound_streett_game(int d) {
  if (d < 1) throw std::invalid_argument("lower-bound streett game needs d >= 1");
  Game game;
  game.kind = GameKind::Streett;
  game.variant = Variant::BoundedCost;
  game.streett.pair_count = 2 * d;
  Arena& arena = game.arena;
  arena.cost_dimension = 2 * d;
  const CostLabel all_inc(static_cast<std::size_t>(2 * d), 'i');

  std::vector<int> v(static_cast<std::size_t>(d)), q(static_cast<std::size_t>(2 * d));
  std::vector<int> vp(static_cast<std::size_t>(d)), p(static_cast<std::size_t>(2 * d));
  std::vector<int> s(static_cast<std::size_t>(2 * d));
  for (int j = 0; j < d; ++j) {
    v[static_cast<std::size_t>(j)] = arena.add_vertex("v" + std::to_string(j), 0);
    q[static_cast<std::size_t>(2 * j)] = arena.add_vertex("q" + std::to_string(2 * j), 0);
    q[static_cast<std::size_t>(2 * j + 1)] = arena.add_vertex("q" + std::to_string(2 * j + 1), 0);
  }
  for (int j = 0; j < d; ++j) {
    vp[static_cast<std::size_t>(j)] = arena.add_vertex("v" + std::to_string(j) + "'", 1);
    p[static_cast<std::size_t>(2 * j)] = arena.add_vertex("p" + std::to_string(2 * j), 0);
    p[static_cast<std::size_t>(2 * j + 1)] = arena.add_vertex("p" + std::to_string(2 * j + 1), 0);
  }
  for (int c = 0; c < 2 * d; ++c)
    s[static_cast<std::size_t>(c)] = arena.add_vertex("s" + std::to_string(c), 0);

  for (int j = 0; j < d; ++j) {
    arena.add_edge(v[static_cast<std::size_t>(j)], q[static_cast<std::size_t>(2 * j)], all_inc);
    arena.add_edge(v[static_cast<std::size_t>(j)], q[static_cast<std::size_t>(2 * j + 1)], all_inc);
    int next = j + 1 < d ? v[static_cast<std::size_t>(j + 1)] : vp[0];
    arena.add_edge(q[static_cast<std::size_t>(2 * j)], next, all_inc);
    arena.add_edge(q[static_cast<std::size_t>(2 * j + 1)], next, all_inc);
    arena.add_edge(vp[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(2 * j)], all_inc);
    arena.add_edge(vp[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(2 * j + 1)], all_inc);
    for (int b = 0; b < 2; ++b) {
      int pc = p[static_cast<std::size_t>(2 * j + b)];
      arena.add_edge(pc, s[static_cast<std::size_t>(2 * j + b)], all_inc);
      if (j + 1 < d) arena.add_edge(pc, vp[static_cast<std::size_t>(j + 1)], all_inc);
    }
  }
  for (int c = 0; c < 2 * d; ++c)
    arena.add_edge(s[static_cast<std::size_t>(c)], s[static_cast<std::size_t>(c)], all_inc);

  game.streett.request_mask.assign(static_cast<std::size_t>(arena.vertex_count()), 0);
  game.streett.response_mask.assign(static_cast<std::size_t>(arena.vertex_count()), 0);
  for (int c = 0; c < 2 * d; ++c) {
    game.streett.request_mask[static_cast<std::size_t>(q[static_cast<std::size_t>(c)])] |= 1u << c;
    for (int other = 0; other < 2 * d; ++other)
      if (other != c)
        game.streett.response_mask[static_cast<std::size_t>(s[static_cast<std::size_t>(other)])] |=
            1u << c;
  }
  return game;
}

FiniteStateStrategy make_lower_bound_streett_strategy(const Game& game, int d) {
  const Arena& arena = game.arena;
  FiniteStateStrategy strategy;
  strategy.player = 1;
  const int states = 1 << d;
  for (int m = 0; m < states; ++m) {
    std::string name = "b";
    for (int j = 0; j < d; ++j) name += ((m >> j) & 1) ? '1' : '0';
    strategy.memory.state_names.push_back(std::move(name));
  }

  // Bit j records which of q_{2j}, q_{2j+1} the play went through.
  auto update = [&](int m, int v) {
    const std::string& name = arena.name(v);
    if (name[0] == 'q') {
      int c = std::stoi(name.substr(1));
      int bit = c / 2;
      int value = c % 2;
      m = (m & ~(1 << bit)) | (value << bit);
    }
    return m;
  };
  const int n = arena.vertex_count();
  strategy.memory.init.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) strategy.memory.init[static_cast<std::size_t>(v)] = update(0, v);
  strategy.memory.update.assign(static_cast<std::size_t>(states),
                                std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int m = 0; m < states; ++m)
    for (int v = 0; v < n; ++v)
      strategy.memory.update[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)] =
          update(m, v);

  strategy.next_move.assign(static_cast<std::size_t>(n),
                            std::vector<int>(static_cast<std::size_t>(states), -1));
  for (int j = 0; j < d; ++j) {
    int vpj = arena.find_vertex("v" + std::to_string(j) + "'");
    for (int m = 0; m < states; ++m) {
      int bit = (m >> j) & 1;
      int target = arena.find_vertex("p" + std::to_string(2 * j + bit));
      strategy.next_move[static_cast<std::size_t>(vpj)][static_cast<std::size_t>(m)] = target;
    }
  }
  return strategy;
}

namespace {

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  bool chance(double p) {
    return static_cast<double>(engine() >> 11) * (1.0 / 9007199254740992.0) < p;
  }
  int pick(int n) { return static_cast<int>(engine() % static_cast<std::uint64_t>(n)); }
};

}  // namespace

Game generate_random_game(const RandomGameSpec& spec) {
  if (spec.vertices < 1) throw std::invalid_argument("random game: need at least one vertex");
  if (spec.vertices > 1 && spec.density <= 0.0)
    throw std::invalid_argument("random game: zero density is infeasible");
  if (spec.kind == GameKind::Streett && (spec.pairs < 1 || spec.pairs > 20))
    throw std::invalid_argument("random game: pair count out of range");

  Rng rng(spec.seed);
  Game game;
  game.kind = spec.kind;
  game.variant = spec.variant;
  const int dim = spec.kind == GameKind::Parity ? 1 : spec.pairs;
  game.arena.cost_dimension = dim;

  for (int v = 0; v < spec.vertices; ++v) {
    game.arena.add_vertex("v" + std::to_string(v), rng.chance(0.5) ? 1 : 0);
    if (spec.kind == GameKind::Parity)
      game.coloring.color.push_back(rng.pick(spec.max_color + 1));
  }
  if (spec.kind == GameKind::Streett) {
    game.streett.pair_count = spec.pairs;
    game.streett.request_mask.assign(static_cast<std::size_t>(spec.vertices), 0);
    game.streett.response_mask.assign(static_cast<std::size_t>(spec.vertices), 0);
    for (int v = 0; v < spec.vertices; ++v)
      for (int c = 0; c < spec.pairs; ++c) {
        if (rng.chance(spec.membership_prob))
          game.streett.request_mask[static_cast<std::size_t>(v)] |= 1u << c;
        if (rng.chance(spec.membership_prob))
          game.streett.response_mask[static_cast<std::size_t>(v)] |= 1u << c;
      }
  }

  auto random_label = [&]() {
    CostLabel label(static_cast<std::size_t>(dim), 'e');
    for (int c = 0; c < dim; ++c)
      if (rng.chance(spec.increment_prob)) label[static_cast<std::size_t>(c)] = 'i';
    return label;
  };
  for (int u = 0; u < spec.vertices; ++u)
    for (int w = 0; w < spec.vertices; ++w)
      if (rng.chance(spec.density)) game.arena.add_edge(u, w, random_label());
  for (int u = 0; u < spec.vertices; ++u)
    if (game.arena.out[static_cast<std::size_t>(u)].empty())
      game.arena.add_edge(u, rng.pick(spec.vertices), random_label());
  return game;
}

}  // namespace costly
