#include <stdexcept>

#include "costly/cost_parity.hpp"
#include "costly/generators.hpp"
#include "costly/verify.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace costly;
using testing::names_of;
using testing::sample_game;
using testing::vertices;

TEST_CASE("request memory follows the update rules") {
  Game game = sample_game();
  RequestMemory memory = build_request_memory(game.arena, game.coloring);
  REQUIRE(memory.structure.state_count() == 2);
  int one = memory.state_of_color(1);
  int a = game.arena.find_vertex("a");
  int b = game.arena.find_vertex("b");
  int c = game.arena.find_vertex("c");
  CHECK(memory.structure.init[static_cast<std::size_t>(a)] == one);
  CHECK(memory.structure.init[static_cast<std::size_t>(b)] == memory.none_state);
  // a b b c: the request of color 1 survives b and is answered by c
  CHECK(memory.structure.run_word({a, b, b, c}) == memory.none_state);
  CHECK(memory.structure.run_word({a, b, b}) == one);

  // wider color ranges
  Arena wide;
  wide.add_vertex("w", 0);
  wide.add_edge(0, 0);
  for (int color : {2, 4, 5}) {
    ParityColoring coloring{{color}};
    Arena arena;
    arena.add_vertex("x", 0);
    arena.add_edge(0, 0);
    RequestMemory m = build_request_memory(arena, coloring);
    CHECK(m.structure.state_count() == (color % 2 == 1 ? 2 : 1));
  }
  {
    // colors 0..8 in one arena: update from request 3
    Arena arena;
    ParityColoring coloring;
    for (int color = 0; color <= 8; ++color) {
      arena.add_vertex("c" + std::to_string(color), 0);
      coloring.color.push_back(color);
    }
    for (int v = 0; v <= 8; ++v) arena.add_edge(v, (v + 1) % 9);
    RequestMemory m = build_request_memory(arena, coloring);
    int three = m.state_of_color(3);
    CHECK(m.structure.run(three, 5) == m.state_of_color(5));
    CHECK(m.structure.run(three, 4) == m.none_state);
    CHECK(m.structure.run(three, 2) == three);
  }
}

TEST_CASE("bounded solver reproduces the sample game regions") {
  Game game = sample_game();
  BoundedCostSolution solution = solve_bounded_cost_parity(game);
  CHECK(names_of(game, solution.region0) == std::vector<std::string>{"g"});
  CHECK(names_of(game, solution.region1) ==
        std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
  CHECK(solution.strategy1.memory.state_count() == 2);
  CHECK(verify_bounded_strategy(game, solution.strategy1, solution.region1, 1).ok);
  CHECK(verify_bounded_strategy(game, solution.strategy0, solution.region0, 0).ok);
}

TEST_CASE("bounded solver rejects multi-dimensional costs") {
  Game game = sample_game();
  game.arena.cost_dimension = 2;
  for (Edge& edge : game.arena.edges) edge.cost += "e";
  CHECK_THROWS_AS(solve_bounded_cost_parity(game), std::invalid_argument);
}

TEST_CASE("all-epsilon bounded games match plain parity") {
  for (unsigned seed = 1; seed <= 40; ++seed) {
    Game game = testing::random_parity_game(seed, 6, 3, Variant::BoundedCost, 0.0);
    BoundedCostSolution bounded = solve_bounded_cost_parity(game);
    CHECK(bounded.region0 == solve_parity(game.arena, game.coloring).region(0));
  }
}

TEST_CASE("projection identity ties the regions to the product") {
  for (unsigned seed = 1; seed <= 30; ++seed) {
    Game game = testing::random_parity_game(seed, 5, 3, Variant::BoundedCost, 0.4);
    BoundedCostSolution solution = solve_bounded_cost_parity(game);
    std::vector<char> in0 = to_mask(solution.sub.game.arena.vertex_count(), solution.region0_sub);
    for (int v = 0; v < solution.sub.game.arena.vertex_count(); ++v) {
      int init = solution.memory.structure.init[static_cast<std::size_t>(v)];
      int q = solution.product.at[static_cast<std::size_t>(v)][static_cast<std::size_t>(init)];
      CHECK((solution.product_solution.winner[static_cast<std::size_t>(q)] == 0) ==
            static_cast<bool>(in0[static_cast<std::size_t>(v)]));
    }
  }
}

TEST_CASE("bounded strategies verify on random games") {
  for (unsigned seed = 1; seed <= 60; ++seed) {
    Game game = testing::random_parity_game(seed, 5, 3, Variant::BoundedCost, 0.4);
    BoundedCostSolution solution = solve_bounded_cost_parity(game);
    CHECK(solution.strategy1.memory.state_count() <=
          static_cast<int>(game.coloring.odd_colors().size()) + 1);
    VerifyResult v0 = verify_bounded_strategy(game, solution.strategy0, solution.region0, 0);
    VerifyResult v1 = verify_bounded_strategy(game, solution.strategy1, solution.region1, 1);
    CAPTURE(seed);
    CAPTURE(v0.reason);
    CAPTURE(v1.reason);
    CHECK(v0.ok);
    CHECK(v1.ok);
    // the pre-extraction finite-state strategy wins as well
    CHECK(verify_bounded_strategy(game, solution.strategy0_fs, solution.region0, 0).ok);
  }
}

TEST_CASE("fixpoint iteration reproduces the sample trace") {
  Game game = sample_game(Variant::Cost);
  CostParitySolution solution = solve_cost_parity(game);
  CHECK(names_of(game, solution.region0) == std::vector<std::string>{"d", "e", "f", "g"});
  CHECK(names_of(game, solution.region1) == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(solution.certificate.layers.size() == 2);
  CHECK(names_of(game, solution.certificate.layers[0].x) == std::vector<std::string>{"g"});
  CHECK(names_of(game, solution.certificate.layers[0].attr) ==
        std::vector<std::string>{"f", "g"});
  CHECK(names_of(game, solution.certificate.layers[1].x) == std::vector<std::string>{"e"});
  CHECK(names_of(game, solution.certificate.layers[1].attr) ==
        std::vector<std::string>{"d", "e"});
  CHECK(solution.iterations == 3);
  CHECK(verify_layered_certificate(game, solution.certificate, solution.region0).ok);
}

TEST_CASE("all-epsilon cost games reduce to parity in one round") {
  for (unsigned seed = 1; seed <= 20; ++seed) {
    Game game = testing::random_parity_game(seed, 5, 3, Variant::Cost, 0.0);
    CostParitySolution solution = solve_cost_parity(game);
    CHECK(solution.region0 == solve_parity(game.arena, game.coloring).region(0));
  }
}

TEST_CASE("region inclusion chain across the variants") {
  for (unsigned seed = 1; seed <= 60; ++seed) {
    Game game = testing::random_parity_game(seed, 5, 3, Variant::Cost, 0.4);
    std::vector<int> bounded = solve_bounded_cost_parity(game).region0;
    std::vector<int> cost = solve_cost_parity(game).region0;
    std::vector<int> classical = solve_parity(game.arena, game.coloring).region(0);
    CHECK(std::includes(cost.begin(), cost.end(), bounded.begin(), bounded.end()));
    CHECK(std::includes(classical.begin(), classical.end(), cost.begin(), cost.end()));
    // determinacy bookkeeping
    CHECK(solve_cost_parity(game).region0.size() + solve_cost_parity(game).region1.size() ==
          static_cast<std::size_t>(game.arena.vertex_count()));
  }
}

TEST_CASE("fixpoint certificates verify and mutations are rejected") {
  for (unsigned seed = 1; seed <= 40; ++seed) {
    Game game = testing::random_parity_game(seed, 5, 3, Variant::Cost, 0.4);
    CostParitySolution solution = solve_cost_parity(game);
    CHECK(verify_layered_certificate(game, solution.certificate, solution.region0).ok);
    if (solution.certificate.layers.size() >= 2) {
      LayeredCertificate swapped = solution.certificate;
      std::swap(swapped.layers[0], swapped.layers[1]);
      CHECK_FALSE(verify_layered_certificate(game, swapped, solution.region0).ok);
    }
  }
  // the empty certificate certifies an empty region
  Game game = sample_game(Variant::Cost);
  LayeredCertificate empty;
  CHECK(verify_layered_certificate(game, empty, {}).ok);
}

TEST_CASE("spoiler keeps requests open past every bound on the sample game") {
  Game game = sample_game(Variant::Cost);
  CostParitySolution solution = solve_cost_parity(game);
  SpoilerDriver spoiler(game, solution);
  FirstSuccessorDriver opponent(game.arena);
  int a = game.arena.find_vertex("a");
  std::vector<PlayStep> trace = simulate_play(game, &opponent, &spoiler, a, 10'000);
  std::vector<int> play;
  for (const PlayStep& step : trace) play.push_back(step.vertex);
  CHECK(max_open_request_cost(game, play) > 20);
  // bounds never decrease
  for (std::size_t i = 1; i < trace.size(); ++i)
    CHECK(trace[i].spoiler_bound >= trace[i - 1].spoiler_bound);
  // outside region1 the spoiler refuses to start
  CHECK_THROWS_AS(simulate_play(game, &opponent, &spoiler, game.arena.find_vertex("g"), 5),
                  std::invalid_argument);
}

TEST_CASE("spoiler without increment edges just violates parity") {
  // single player-1 odd loop: region1 is everything, no increments
  Game game;
  game.kind = GameKind::Parity;
  game.variant = Variant::Cost;
  game.arena.add_vertex("u", 1);
  game.arena.add_vertex("w", 1);
  game.arena.add_edge(0, 1, "e");
  game.arena.add_edge(1, 0, "e");
  game.coloring.color = {1, 0};
  CostParitySolution solution = solve_cost_parity(game);
  REQUIRE(solution.region1.size() == 2);
  SpoilerDriver spoiler(game, solution);
  std::vector<PlayStep> trace = simulate_play(game, nullptr, &spoiler, 0, 200);
  CHECK(spoiler.bound() == 1);  // never restarts
  // the tail alternates u w, so the parity condition fails
  std::vector<int> play;
  for (const PlayStep& step : trace) play.push_back(step.vertex);
  Lasso lasso;
  lasso.prefix.assign(play.begin(), play.end() - 2);
  lasso.cycle = {play[play.size() - 2], play[play.size() - 1]};
  CHECK(eval_condition_lasso(game, lasso, Variant::Classical) == 1);
}

TEST_CASE("simulation annotations follow the request memory") {
  Game game = sample_game(Variant::Cost);
  RequestMemory memory = build_request_memory(game.arena, game.coloring);
  FirstSuccessorDriver all_first(game.arena);
  int a = game.arena.find_vertex("a");
  std::vector<PlayStep> trace = simulate_play(game, nullptr, &all_first, a, 12);
  REQUIRE(trace.size() == 13);
  // hand-stepped: first-successor play is a, then b forever on the
  // increment loop; the request of color 1 stays open and its cost counts
  // the loop traversals
  int b = game.arena.find_vertex("b");
  for (std::size_t i = 0; i < trace.size(); ++i) {
    CHECK(trace[i].vertex == (i == 0 ? a : b));
    CHECK(trace[i].request_color == 1);
    CHECK(trace[i].cost_since_request == std::max<std::int64_t>(0, static_cast<std::int64_t>(i) - 1));
  }
  std::vector<int> word;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    word.push_back(trace[i].vertex);
    CHECK(trace[i].request_state == memory.structure.run_word(word));
  }
  // zero steps: only the start vertex
  CHECK(simulate_play(game, nullptr, &all_first, a, 0).size() == 1);
  // missing driver for the owner is an error
  CHECK_THROWS_AS(simulate_play(game, &all_first, nullptr, a, 3), std::invalid_argument);
}

TEST_CASE("lower-bound parity family sizes and regions") {
  for (int d = 1; d <= 4; ++d) {
    Game game = make_lower_bound_parity_game(d);
    CHECK(game.arena.vertex_count() == 3 * d + 1);
    CHECK(validate_game(game).empty());
    BoundedCostSolution solution = solve_bounded_cost_parity(game);
    CHECK(solution.region1.size() == static_cast<std::size_t>(game.arena.vertex_count()));
    CHECK(solution.strategy1.memory.state_count() == d + 1);
    CHECK(verify_bounded_strategy(game, solution.strategy1, solution.region1, 1).ok);
  }
}

TEST_CASE("no positional spoiler exists for the small lower-bound games") {
  for (int d : {1, 2}) {
    Game game = make_lower_bound_parity_game(d);
    int hub = game.arena.find_vertex("hub");
    CHECK(positional_strategies_insufficient(game, 1, hub));
  }
}
