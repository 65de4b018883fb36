#include <stdexcept>

#include "costly/io.hpp"
#include "costly/lasso.hpp"
#include "costly/verify.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace costly;
using testing::sample_game;

TEST_CASE("verifier accepts the trivial even loop") {
  Arena arena;
  arena.add_vertex("v", 0);
  arena.add_edge(0, 0);
  ParityColoring coloring{{0}};
  PositionalStrategy identity;
  identity.player = 0;
  identity.next = {0};
  CHECK(verify_parity_strategy(arena, coloring, identity, {0}).ok);
}

TEST_CASE("corrupted parity strategies are rejected with a losing lasso") {
  int rejections = 0;
  for (unsigned seed = 1; seed <= 60; ++seed) {
    Game game = testing::random_parity_game(seed, 6, 4);
    ParitySolution solution = solve_parity(game.arena, game.coloring);
    std::vector<int> region0 = solution.region(0);
    if (region0.empty()) continue;
    // redirect one strategy edge at a time
    for (int v : region0) {
      if (game.arena.owner[static_cast<std::size_t>(v)] != 0) continue;
      for (int w : game.arena.successors(v)) {
        if (w == solution.strategy0.at(v)) continue;
        PositionalStrategy corrupted = solution.strategy0;
        corrupted.next[static_cast<std::size_t>(v)] = w;
        VerifyResult result = verify_parity_strategy(game.arena, game.coloring, corrupted, region0);
        if (result.ok) continue;  // the alternative move may also win
        ++rejections;
        if (result.counterexample) {
          // the witness is a play the opponent wins
          CHECK(eval_parity_lasso(game.arena, game.coloring, *result.counterexample) == 1);
        }
      }
    }
  }
  CHECK(rejections > 30);
}

TEST_CASE("strategies leaving the claimed region are rejected") {
  Game game = sample_game();
  // claim only {g}: fine, g's loop stays inside
  PositionalStrategy empty;
  empty.player = 0;
  empty.next.assign(static_cast<std::size_t>(game.arena.vertex_count()), -1);
  CHECK(verify_parity_strategy(game.arena, game.coloring, empty, {game.arena.find_vertex("g")}).ok);
  // claim {f}: the forced move leaves the region
  VerifyResult result =
      verify_parity_strategy(game.arena, game.coloring, empty, {game.arena.find_vertex("f")});
  CHECK_FALSE(result.ok);
  CHECK(result.reason.find("leaves") != std::string::npos);
}

TEST_CASE("bounded verifier rejections carry evaluator-confirmed lassos") {
  int rejections = 0;
  for (unsigned seed = 1; seed <= 40; ++seed) {
    Game game = testing::random_parity_game(seed, 5, 3, Variant::BoundedCost, 0.4);
    BoundedCostSolution solution = solve_bounded_cost_parity(game);
    for (int v : solution.region0) {
      if (game.arena.owner[static_cast<std::size_t>(v)] != 0) continue;
      for (int w : game.arena.successors(v)) {
        if (w == solution.strategy0.at(v)) continue;
        PositionalStrategy corrupted = solution.strategy0;
        corrupted.next[static_cast<std::size_t>(v)] = w;
        VerifyResult result = verify_bounded_strategy(game, corrupted, solution.region0, 0);
        if (result.ok) continue;
        // a redirected edge may run into vertices where the strategy is
        // undefined; only cycle rejections carry a lasso
        if (!result.counterexample) {
          CHECK(result.reason.find("undefined") != std::string::npos);
          continue;
        }
        ++rejections;
        check_lasso(game.arena, *result.counterexample);
        CHECK(eval_condition_lasso(game, *result.counterexample, Variant::BoundedCost) == 1);
      }
    }
  }
  CHECK(rejections > 10);
}

TEST_CASE("streett verifier rejections carry evaluator-confirmed lassos") {
  int rejections = 0;
  for (unsigned seed = 1; seed <= 40; ++seed) {
    Game game = testing::random_streett_game(seed, 5, 2, Variant::BoundedCost);
    BoundedCostStreettSolution solution = solve_bounded_cost_streett(game);
    // corrupt Player 1's moves
    for (int v : solution.region1) {
      if (game.arena.owner[static_cast<std::size_t>(v)] != 1) continue;
      for (int w : game.arena.successors(v)) {
        FiniteStateStrategy corrupted = solution.strategy1;
        bool changed = false;
        for (int s = 0; s < corrupted.memory.state_count(); ++s) {
          if (corrupted.at(v, s) >= 0 && corrupted.at(v, s) != w) {
            corrupted.next_move[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] = w;
            changed = true;
          }
        }
        if (!changed) continue;
        VerifyResult result = verify_bounded_strategy(game, corrupted, solution.region1, 1);
        if (result.ok) continue;
        if (!result.counterexample) {
          CHECK(result.reason.find("undefined") != std::string::npos);
          continue;
        }
        ++rejections;
        check_lasso(game.arena, *result.counterexample);
        CHECK(eval_condition_lasso(game, *result.counterexample, Variant::BoundedCost) == 0);
      }
    }
  }
  CHECK(rejections > 5);
}

TEST_CASE("pipeline independence: both backends agree") {
  ParityBackend oracle = enumeration_backend(0);
  int checked = 0;
  for (unsigned seed = 1; checked < 20 && seed <= 80; ++seed) {
    RandomGameSpec spec;
    spec.kind = GameKind::Parity;
    spec.variant = Variant::Cost;
    spec.vertices = 4;
    spec.max_color = 3;
    spec.density = 0.3;
    spec.increment_prob = 0.4;
    spec.seed = seed;
    Game game = generate_random_game(spec);
    try {
      CostParitySolution with_oracle = solve_cost_parity(game, oracle);
      CHECK(solve_cost_parity(game).region0 == with_oracle.region0);
      ++checked;
    } catch (const std::runtime_error&) {
      // enumeration budget exceeded on this instance: skip
    }
  }
  CHECK(checked == 20);
}

TEST_CASE("oracle budget guard") {
  RandomGameSpec spec;
  spec.vertices = 7;
  spec.density = 0.9;
  spec.seed = 5;
  Game game = generate_random_game(spec);
  CHECK_THROWS_AS((void)parity_oracle_enumerate(game.arena, game.coloring, 4),
                  std::runtime_error);
}

TEST_CASE("random games are seed-deterministic and well-formed") {
  for (unsigned seed = 1; seed <= 30; ++seed) {
    RandomGameSpec spec;
    spec.seed = seed;
    spec.vertices = 1 + static_cast<int>(seed % 7);
    Game once = generate_random_game(spec);
    Game twice = generate_random_game(spec);
    CHECK(validate_game(once).empty());
    CHECK(serialize_game(once) == serialize_game(twice));
  }
  RandomGameSpec bad;
  bad.vertices = 3;
  bad.density = 0.0;
  CHECK_THROWS_AS(generate_random_game(bad), std::invalid_argument);
  RandomGameSpec one;
  one.vertices = 1;
  one.density = 0.0;
  CHECK(generate_random_game(one).arena.vertex_count() == 1);
}
