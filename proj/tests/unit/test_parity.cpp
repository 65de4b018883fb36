#include "costly/parity.hpp"
#include "costly/verify.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace costly;
using testing::sample_game;

TEST_CASE("single even self-loop belongs to Player 0") {
  Arena arena;
  arena.add_vertex("v", 0);
  arena.add_edge(0, 0);
  ParityColoring coloring{{0}};
  ParitySolution solution = solve_parity(arena, coloring);
  CHECK(solution.winner == std::vector<int>{0});
}

TEST_CASE("sample game without costs is fully won by Player 0") {
  Game game = sample_game();
  ParitySolution solution = solve_parity(game.arena, game.coloring);
  for (int v = 0; v < game.arena.vertex_count(); ++v) CHECK(solution.winner[static_cast<std::size_t>(v)] == 0);
  CHECK(parity_oracle_enumerate(game.arena, game.coloring).size() ==
        static_cast<std::size_t>(game.arena.vertex_count()));
}

TEST_CASE("solver agrees with the enumeration oracle on random games") {
  for (unsigned seed = 1; seed <= 150; ++seed) {
    Game game = testing::random_parity_game(seed, 6, 4);
    ParitySolution solution = solve_parity(game.arena, game.coloring);
    CHECK(solution.region(0) == parity_oracle_enumerate(game.arena, game.coloring));
  }
}

TEST_CASE("player swap duality: shifting every color flips the regions") {
  for (unsigned seed = 1; seed <= 60; ++seed) {
    Game game = testing::random_parity_game(seed, 6, 3);
    ParityColoring shifted = game.coloring;
    for (int& c : shifted.color) ++c;
    Arena swapped = game.arena;
    for (int& o : swapped.owner) o = 1 - o;
    ParitySolution original = solve_parity(game.arena, game.coloring);
    ParitySolution flipped = solve_parity(swapped, shifted);
    CHECK(original.region(0) == flipped.region(1));
  }
}

TEST_CASE("solution stable under color compression") {
  for (unsigned seed = 1; seed <= 60; ++seed) {
    Game game = testing::random_parity_game(seed, 6, 6);
    // compress: map used colors to a dense range preserving order and parity
    std::vector<int> used = game.coloring.color;
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<int> target;
    int next_even = 0, next_odd = 1;
    for (int c : used) {
      if (c % 2 == 0) {
        next_even = std::max(next_even, (target.empty() ? 0 : target.back() + 1));
        if (next_even % 2 == 1) ++next_even;
        target.push_back(next_even);
      } else {
        next_odd = std::max(next_odd, (target.empty() ? 1 : target.back() + 1));
        if (next_odd % 2 == 0) ++next_odd;
        target.push_back(next_odd);
      }
    }
    ParityColoring compressed = game.coloring;
    for (int& c : compressed.color) {
      auto it = std::lower_bound(used.begin(), used.end(), c);
      c = target[static_cast<std::size_t>(it - used.begin())];
    }
    CHECK(solve_parity(game.arena, game.coloring).region(0) ==
          solve_parity(game.arena, compressed).region(0));
  }
}

TEST_CASE("both returned strategies pass the cycle certificate") {
  for (unsigned seed = 1; seed <= 100; ++seed) {
    Game game = testing::random_parity_game(seed, 7, 4);
    ParitySolution solution = solve_parity(game.arena, game.coloring);
    for (int player : {0, 1}) {
      VerifyResult result = verify_parity_strategy(game.arena, game.coloring,
                                                   solution.strategy(player),
                                                   solution.region(player));
      CHECK(result.ok);
      if (!result.ok) {
        CAPTURE(seed);
        CAPTURE(player);
        CAPTURE(result.reason);
      }
    }
  }
}
