// Acceptance suite: runs every documented end-to-end requirement and prints
// one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "costly/generators.hpp"
#include "costly/io.hpp"
#include "costly/lasso.hpp"
#include "costly/sheets.hpp"
#include "costly/streett.hpp"
#include "costly/verify.hpp"

using namespace costly;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool(std::string&)>& run) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = run(detail);
  } catch (const std::exception& error) {
    detail = std::string("exception: ") + error.what();
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::printf("[%s] criterion %2d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", number,
              title.c_str(), static_cast<long long>(elapsed), detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!ok) ++failures;
}

Game sample_game(Variant variant) {
  Game game;
  game.kind = GameKind::Parity;
  game.variant = variant;
  Arena& arena = game.arena;
  auto vertex = [&](const char* name, int color) {
    arena.add_vertex(name, 1);
    game.coloring.color.push_back(color);
  };
  vertex("a", 1);
  vertex("b", 0);
  vertex("c", 2);
  vertex("d", 1);
  vertex("e", 0);
  vertex("f", 1);
  vertex("g", 0);
  auto edge = [&](const char* from, const char* to, const char* cost) {
    arena.add_edge(arena.find_vertex(from), arena.find_vertex(to), cost);
  };
  edge("a", "b", "e");
  edge("b", "b", "i");
  edge("b", "c", "e");
  edge("c", "a", "e");
  edge("c", "d", "e");
  edge("d", "e", "e");
  edge("e", "e", "i");
  edge("e", "f", "e");
  edge("f", "g", "e");
  edge("g", "g", "i");
  return game;
}

std::vector<std::string> names(const Game& game, const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int v : ids) out.push_back(game.arena.name(v));
  return out;
}

// Shared counters for criterion 7 (strategy certification across the run).
int certification_failures = 0;
int positionalizations = 0;

void certify(const VerifyResult& result) {
  if (!result.ok) ++certification_failures;
}

}  // namespace

int main() {
  const std::int64_t oracle_budget = 200'000;

  criterion(1, "sample-game regions across the cost variants", [&](std::string& detail) {
    Game cost_game = sample_game(Variant::Cost);
    CostParitySolution cost = solve_cost_parity(cost_game);
    Game bounded_game = sample_game(Variant::BoundedCost);
    BoundedCostSolution bounded = solve_bounded_cost_parity(bounded_game);
    certify(verify_bounded_strategy(bounded_game, bounded.strategy0, bounded.region0, 0));
    certify(verify_bounded_strategy(bounded_game, bounded.strategy1, bounded.region1, 1));
    certify(verify_layered_certificate(cost_game, cost.certificate, cost.region0));
    bool ok = names(cost_game, cost.region0) == std::vector<std::string>{"d", "e", "f", "g"} &&
              names(cost_game, cost.region1) == std::vector<std::string>{"a", "b", "c"} &&
              names(bounded_game, bounded.region0) == std::vector<std::string>{"g"};
    if (!ok) detail = "regions differ from the documented ones";
    return ok;
  });

  criterion(2, "fixpoint trace on the sample game", [&](std::string& detail) {
    Game game = sample_game(Variant::Cost);
    CostParitySolution solution = solve_cost_parity(game);
    bool ok = solution.iterations == 3 && solution.certificate.layers.size() == 2 &&
              names(game, solution.certificate.layers[0].x) == std::vector<std::string>{"g"} &&
              names(game, solution.certificate.layers[0].attr) ==
                  std::vector<std::string>{"f", "g"} &&
              names(game, solution.certificate.layers[1].x) == std::vector<std::string>{"e"} &&
              names(game, solution.certificate.layers[1].attr) ==
                  std::vector<std::string>{"d", "e"};
    if (!ok) detail = "trace deviates from X1={g}, W1={f,g}, X2={e}, W2={d,e,f,g}, stop at 3";
    return ok;
  });

  criterion(3, "parity lower-bound family needs d+1 memory states", [&](std::string& detail) {
    for (int d = 1; d <= 4; ++d) {
      Game game = make_lower_bound_parity_game(d);
      BoundedCostSolution solution = solve_bounded_cost_parity(game);
      if (solution.region1.size() != static_cast<std::size_t>(game.arena.vertex_count())) {
        detail = "d=" + std::to_string(d) + ": Player 1 does not win everywhere";
        return false;
      }
      if (solution.strategy1.memory.state_count() != d + 1) {
        detail = "d=" + std::to_string(d) + ": strategy has " +
                 std::to_string(solution.strategy1.memory.state_count()) + " states";
        return false;
      }
      VerifyResult verified =
          verify_bounded_strategy(game, solution.strategy1, solution.region1, 1);
      certify(verified);
      if (!verified.ok) {
        detail = "d=" + std::to_string(d) + ": strategy failed verification";
        return false;
      }
    }
    Game smallest = make_lower_bound_parity_game(1);
    if (!positional_strategies_insufficient(smallest, 1, smallest.arena.find_vertex("hub"))) {
      detail = "a positional spoiler exists for d=1";
      return false;
    }
    return true;
  });

  criterion(4, "streett lower-bound family needs 2^d memory states", [&](std::string& detail) {
    for (int d = 1; d <= 2; ++d) {
      Game game = make_lower_bound_streett_game(d);
      FiniteStateStrategy mirror = make_lower_bound_streett_strategy(game, d);
      if (mirror.memory.state_count() > (1 << d)) {
        detail = "mirror strategy too large";
        return false;
      }
      VerifyResult verified =
          verify_bounded_strategy(game, mirror, {game.arena.find_vertex("v0")}, 1);
      certify(verified);
      if (!verified.ok) {
        detail = "d=" + std::to_string(d) + ": mirror strategy rejected: " + verified.reason;
        return false;
      }
    }
    Game smallest = make_lower_bound_streett_game(1);
    BoundedCostStreettSolution solved = solve_bounded_cost_streett(smallest);
    std::vector<char> region1 = to_mask(smallest.arena.vertex_count(), solved.region1);
    if (!region1[static_cast<std::size_t>(smallest.arena.find_vertex("v0"))]) {
      detail = "solver denies Player 1 the start vertex for d=1";
      return false;
    }
    if (!positional_strategies_insufficient(smallest, 1, smallest.arena.find_vertex("v0"))) {
      detail = "a positional strategy wins from v0 for d=1";
      return false;
    }
    return true;
  });

  criterion(5, "oracle equivalence batches", [&](std::string& detail) {
    int parity_checked = 0;
    for (unsigned seed = 1; parity_checked < 500; ++seed) {
      if (seed > 5000) {
        detail = "not enough oracle-feasible parity samples";
        return false;
      }
      RandomGameSpec spec;
      spec.vertices = 2 + static_cast<int>(seed % 6);  // up to 7
      spec.max_color = 4;
      spec.density = 0.3;
      spec.seed = seed;
      Game game = generate_random_game(spec);
      ParitySolution solution = solve_parity(game.arena, game.coloring);
      std::vector<int> oracle;
      try {
        oracle = parity_oracle_enumerate(game.arena, game.coloring, oracle_budget);
      } catch (const std::runtime_error&) {
        continue;  // strategy space over budget: not a comparable sample
      }
      ++parity_checked;
      certify(verify_parity_strategy(game.arena, game.coloring, solution.strategy0,
                                     solution.region(0)));
      certify(verify_parity_strategy(game.arena, game.coloring, solution.strategy1,
                                     solution.region(1)));
      if (solution.region(0) != oracle) {
        detail = "parity disagreement at seed " + std::to_string(seed);
        return false;
      }
    }

    ParityBackend oracle_backend = enumeration_backend(oracle_budget);
    int cost_checked = 0;
    for (unsigned seed = 1; cost_checked < 200; ++seed) {
      if (seed > 5000) {
        detail = "not enough oracle-feasible cost samples";
        return false;
      }
      RandomGameSpec spec;
      spec.kind = GameKind::Parity;
      spec.variant = Variant::Cost;
      spec.vertices = 3 + static_cast<int>(seed % 2);
      spec.max_color = 3;
      spec.density = 0.3;
      spec.increment_prob = 0.4;
      spec.seed = 90'000 + seed;
      Game game = generate_random_game(spec);
      CostParitySolution recursive = solve_cost_parity(game);
      CostParitySolution enumerated;
      try {
        enumerated = solve_cost_parity(game, oracle_backend);
      } catch (const std::runtime_error&) {
        continue;
      }
      ++cost_checked;
      certify(verify_layered_certificate(game, recursive.certificate, recursive.region0));
      if (recursive.region0 != enumerated.region0) {
        detail = "cost pipeline disagreement at seed " + std::to_string(seed);
        return false;
      }
    }

    for (unsigned seed = 1; seed <= 100; ++seed) {
      RandomGameSpec spec;
      spec.kind = GameKind::Streett;
      spec.vertices = 3 + static_cast<int>(seed % 4);  // up to 6
      spec.pairs = 1 + static_cast<int>(seed % 2);
      spec.density = 0.35;
      spec.membership_prob = 0.3;
      spec.seed = 70'000 + seed;
      Game game = generate_random_game(spec);
      StreettSolution solution = solve_streett(game.arena, game.streett);
      StreettRegions oracle = streett_oracle_enumerate(game.arena, game.streett, oracle_budget);
      certify(verify_classical_strategy(game, solution.strategy0, solution.region0, 0));
      certify(verify_classical_strategy(game, solution.strategy1, solution.region1, 1));
      if (solution.region0 != oracle.region0) {
        detail = "streett disagreement at seed " + std::to_string(seed);
        return false;
      }
    }
    detail = "500 parity + 200 cost-pipeline + 100 streett samples, zero disagreements";
    return true;
  });

  criterion(6, "region inclusion chains and all-epsilon collapse", [&](std::string& detail) {
    auto includes = [](const std::vector<int>& big, const std::vector<int>& small) {
      return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    for (unsigned seed = 1; seed <= 120; ++seed) {
      RandomGameSpec spec;
      spec.kind = GameKind::Parity;
      spec.variant = Variant::Cost;
      spec.vertices = 3 + static_cast<int>(seed % 3);
      spec.max_color = 3;
      spec.density = 0.35;
      spec.increment_prob = seed % 5 == 0 ? 0.0 : 0.4;
      spec.seed = 40'000 + seed;
      Game game = generate_random_game(spec);
      BoundedCostSolution bounded = solve_bounded_cost_parity(game);
      CostParitySolution cost = solve_cost_parity(game);
      std::vector<int> classical = solve_parity(game.arena, game.coloring).region(0);
      certify(verify_bounded_strategy(game, bounded.strategy0, bounded.region0, 0));
      certify(verify_bounded_strategy(game, bounded.strategy1, bounded.region1, 1));
      certify(verify_layered_certificate(game, cost.certificate, cost.region0));
      if (!includes(cost.region0, bounded.region0) || !includes(classical, cost.region0)) {
        detail = "parity chain violated at seed " + std::to_string(seed);
        return false;
      }
      if (seed % 5 == 0 && (bounded.region0 != cost.region0 || cost.region0 != classical)) {
        detail = "all-epsilon parity game did not collapse at seed " + std::to_string(seed);
        return false;
      }
      // reduction-produced strategies stay positionalizable (criterion 7 input)
      if (!bounded.region0.empty()) {
        ++positionalizations;
        try {
          PositionalStrategy positional =
              positionalize(game, bounded.strategy0_fs, bounded.region0);
          certify(verify_bounded_strategy(game, positional, bounded.region0, 0));
        } catch (const std::exception&) {
          ++certification_failures;
        }
      }
    }
    for (unsigned seed = 1; seed <= 60; ++seed) {
      RandomGameSpec spec;
      spec.kind = GameKind::Streett;
      spec.variant = Variant::Cost;
      spec.vertices = 4;
      spec.pairs = 2;
      spec.density = 0.35;
      spec.membership_prob = 0.3;
      spec.increment_prob = seed % 5 == 0 ? 0.0 : 0.4;
      spec.seed = 50'000 + seed;
      Game game = generate_random_game(spec);
      BoundedCostStreettSolution bounded = solve_bounded_cost_streett(game);
      CostStreettSolution cost = solve_cost_streett(game);
      std::vector<int> classical = solve_streett(game.arena, game.streett).region0;
      certify(verify_bounded_strategy(game, bounded.strategy1, bounded.region1, 1));
      certify(verify_bounded_strategy_on_subdivision(game, bounded.strategy0,
                                                     bounded.region0_sub, 0));
      certify(verify_layered_certificate(game, cost.certificate, cost.region0));
      if (!includes(cost.region0, bounded.region0) || !includes(classical, cost.region0)) {
        detail = "streett chain violated at seed " + std::to_string(seed);
        return false;
      }
      if (seed % 5 == 0 && (bounded.region0 != cost.region0 || cost.region0 != classical)) {
        detail = "all-epsilon streett game did not collapse at seed " + std::to_string(seed);
        return false;
      }
    }
    detail = "120 parity + 60 streett samples, zero violations";
    return true;
  });

  criterion(7, "strategy certification across the whole run", [&](std::string& detail) {
    detail = std::to_string(positionalizations) + " positionalizations, " +
             std::to_string(certification_failures) + " certification failures";
    return certification_failures == 0 && positionalizations > 0;
  });

  criterion(8, "sheet laws", [&](std::string& detail) {
    SheetSpace space{5, 3};
    Sheet s;
    s.kind = Sheet::kProper;
    s.x = {3, 3, 0, 1, 3};
    auto equals = [&](const Sheet& sheet, std::vector<int> expectation) {
      return sheet.kind == Sheet::kProper && sheet.x == expectation;
    };
    if (!equals(sheet_increment(space, s, 1).sheet, {5, 0, 0, 0, 0}) ||
        !equals(sheet_increment(space, s, 2).sheet, {5, 0, 0, 0, 0}) ||
        !equals(sheet_increment(space, s, 3).sheet, {3, 3, 1, 0, 0}) ||
        !equals(sheet_increment(space, s, 4).sheet, {3, 3, 0, 2, 0}) ||
        !equals(sheet_increment(space, s, 5).sheet, {3, 3, 0, 2, 0})) {
      detail = "published increment examples do not reproduce";
      return false;
    }

    // monotonicity of increments and tail resets
    std::mt19937_64 rng(2024);
    auto random_sheet = [&]() {
      Sheet sheet;
      sheet.kind = Sheet::kProper;
      sheet.x.assign(static_cast<std::size_t>(space.coord_count()), 0);
      sheet.x[0] = 1 + 2 * static_cast<int>(rng() % 3);
      for (int k = 2; k <= space.coord_count(); ++k)
        sheet.x[static_cast<std::size_t>(k - 1)] = static_cast<int>(rng() % 4);
      return sheet;
    };
    for (int i = 0; i < 10'000; ++i) {
      Sheet x = random_sheet(), y = random_sheet();
      if (y < x) std::swap(x, y);
      int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(space.coord_count()));
      if (sheet_increment(space, y, k).sheet < sheet_increment(space, x, k).sheet) {
        detail = "increment is not monotone";
        return false;
      }
      Sheet xr = x, yr = y;
      std::fill(xr.x.begin() + k, xr.x.end(), 0);
      std::fill(yr.x.begin() + k, yr.x.end(), 0);
      if (yr < xr) {
        detail = "tail reset is not monotone";
        return false;
      }
    }

    // congruence along the sample game
    Game game = sample_game(Variant::BoundedCost);
    SheetSpace game_space = sheet_space_for(game, 1);
    auto random_prefix = [&]() {
      std::vector<int> prefix{static_cast<int>(rng() % 7)};
      int length = static_cast<int>(rng() % 12);
      for (int i = 0; i < length; ++i) {
        auto succ = game.arena.successors(prefix.back());
        prefix.push_back(succ[rng() % succ.size()]);
      }
      return prefix;
    };
    int checked = 0;
    while (checked < 10'000) {
      std::vector<int> x = random_prefix();
      std::vector<int> y = random_prefix();
      if (x.back() != y.back()) continue;
      ++checked;
      Sheet sx = sheet_of_prefix(game_space, game, x);
      Sheet sy = sheet_of_prefix(game_space, game, y);
      if (sy < sx) std::swap(x, y);
      for (int w : game.arena.successors(x.back())) {
        std::vector<int> xw = x, yw = y;
        xw.push_back(w);
        yw.push_back(w);
        if (sheet_of_prefix(game_space, game, yw) < sheet_of_prefix(game_space, game, xw)) {
          detail = "congruence violated";
          return false;
        }
      }
    }
    detail = "examples exact, 10k congruence pairs, 10k monotonicity pairs";
    return true;
  });

  criterion(9, "spoiler keeps growing the open-request cost", [&](std::string& detail) {
    Game game = sample_game(Variant::Cost);
    CostParitySolution solution = solve_cost_parity(game);
    SpoilerDriver spoiler(game, solution);
    FirstSuccessorDriver opponent(game.arena);
    std::vector<PlayStep> trace =
        simulate_play(game, &opponent, &spoiler, game.arena.find_vertex("a"), 10'000);
    std::vector<int> play;
    play.reserve(trace.size());
    for (const PlayStep& step : trace) play.push_back(step.vertex);
    std::int64_t best = max_open_request_cost(game, play);
    detail = "largest open-request cost seen: " + std::to_string(best);
    return best > 20;
  });

  criterion(10, "parity-as-streett encoding matches on the sample game",
            [&](std::string& detail) {
    for (Variant variant : {Variant::Classical, Variant::BoundedCost, Variant::Cost}) {
      Game game = sample_game(variant);
      Game encoded = encode_parity_as_streett(game);
      std::vector<int> parity_region, streett_region;
      switch (variant) {
        case Variant::Classical:
          parity_region = solve_parity(game.arena, game.coloring).region(0);
          streett_region = solve_streett(encoded.arena, encoded.streett).region0;
          break;
        case Variant::BoundedCost:
          parity_region = solve_bounded_cost_parity(game).region0;
          streett_region = solve_bounded_cost_streett(encoded).region0;
          break;
        case Variant::Cost:
          parity_region = solve_cost_parity(game).region0;
          streett_region = solve_cost_streett(encoded).region0;
          break;
      }
      if (parity_region != streett_region) {
        detail = std::string("variant ") + to_string(variant) + " disagrees";
        return false;
      }
    }
    return true;
  });

  if (failures > 0) {
    std::printf("%d criteria FAILED\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
