#include "costly/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "costly/generators.hpp"
#include "costly/io.hpp"
#include "costly/sheets.hpp"
#include "costly/verify.hpp"

namespace costly {

namespace {

struct Options {
  std::vector<std::string> positional;
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;

  std::optional<std::string> value(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) return std::nullopt;
    return it->second;
  }
  bool flag(const std::string& key) const { return flags.count(key) > 0; }
};

const char* kUsage =
    "usage: costly <command> ...\n"
    "  solve <file> [--variant v] [--trace] [--strategy0 f] [--strategy1 f]\n"
    "  verify <game> <strategy-file> [--variant v]\n"
    "  reduce <file> --to (pcrr-parity|streett)\n"
    "  generate (random|lower-parity|lower-streett) [--d n] [--seed s] [--vertices n]\n"
    "           [--density p] [--colors c] [--pairs d] [--increment-prob p]\n"
    "           [--membership-prob p] [--kind k] [--variant v]\n"
    "  simulate <file> --spoiler --steps N [--start v] [--variant v]\n"
    "  oracle-check <file> [--variant v]\n"
    "  dot <file> [--solve] [--variant v]\n"
    "variants: classical, cost, bounded-cost\n";

Options parse_options(const std::vector<std::string>& args, std::size_t from,
                      const std::vector<std::string>& value_keys,
                      const std::vector<std::string>& flag_keys) {
  Options options;
  for (std::size_t i = from; i < args.size(); ++i) {
    const std::string& arg = args[i];
    if (arg.rfind("--", 0) == 0) {
      std::string key = arg.substr(2);
      if (std::find(flag_keys.begin(), flag_keys.end(), key) != flag_keys.end()) {
        options.flags[key] = true;
      } else if (std::find(value_keys.begin(), value_keys.end(), key) != value_keys.end()) {
        if (i + 1 >= args.size()) throw std::runtime_error("option --" + key + " needs a value");
        options.values[key] = args[++i];
      } else {
        throw std::runtime_error("unknown option --" + key);
      }
    } else {
      options.positional.push_back(arg);
    }
  }
  return options;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream content;
  content << file.rdbuf();
  return content.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << content;
}

Game load_game(const std::string& path, const Options& options) {
  Game game = parse_game(read_file(path));
  if (auto v = options.value("variant")) {
    if (*v == "classical")
      game.variant = Variant::Classical;
    else if (*v == "cost")
      game.variant = Variant::Cost;
    else if (*v == "bounded-cost")
      game.variant = Variant::BoundedCost;
    else
      throw std::runtime_error("unknown variant '" + *v + "'");
  }
  if (auto violations = validate_game(game); !violations.empty())
    throw std::runtime_error("invalid game: " + violations.front());
  return game;
}

std::string region_line(const Game& game, const char* label, const std::vector<int>& region) {
  std::string line = label;
  for (int v : region) line += " " + game.arena.name(v);
  return line;
}

struct CliSolution {
  GameSolution solution;
  bool strategy0_subdivided = false;
  std::vector<int> region0_for_file;  // strategy0's claimed region (maybe subdivided coords)
  std::vector<std::string> trace;
};

CliSolution solve_dispatch(const Game& game) {
  CliSolution cli;
  if (game.kind == GameKind::Parity) {
    switch (game.variant) {
      case Variant::Classical: {
        ParitySolution sol = solve_parity(game.arena, game.coloring);
        cli.solution.region0 = sol.region(0);
        cli.solution.region1 = sol.region(1);
        cli.solution.strategy0 = sol.strategy0;
        cli.solution.strategy1 = sol.strategy1;
        break;
      }
      case Variant::BoundedCost: {
        BoundedCostSolution sol = solve_bounded_cost_parity(game);
        cli.solution.region0 = sol.region0;
        cli.solution.region1 = sol.region1;
        cli.solution.strategy0 = sol.strategy0;
        cli.solution.strategy1 = sol.strategy1;
        break;
      }
      case Variant::Cost: {
        CostParitySolution sol = solve_cost_parity(game);
        cli.solution.region0 = sol.region0;
        cli.solution.region1 = sol.region1;
        cli.solution.strategy0 = sol.certificate;
        cli.solution.strategy1 = InfiniteMemoryStrategy{"use simulate --spoiler"};
        cli.trace = sol.trace;
        break;
      }
    }
    cli.region0_for_file = cli.solution.region0;
    return cli;
  }
  switch (game.variant) {
    case Variant::Classical: {
      StreettSolution sol = solve_streett(game.arena, game.streett);
      cli.solution.region0 = sol.region0;
      cli.solution.region1 = sol.region1;
      cli.solution.strategy0 = sol.strategy0;
      cli.solution.strategy1 = sol.strategy1;
      cli.region0_for_file = sol.region0;
      break;
    }
    case Variant::BoundedCost: {
      BoundedCostStreettSolution sol = solve_bounded_cost_streett(game);
      cli.solution.region0 = sol.region0;
      cli.solution.region1 = sol.region1;
      cli.solution.strategy0 = sol.strategy0;
      cli.solution.strategy1 = sol.strategy1;
      cli.strategy0_subdivided = true;
      cli.region0_for_file = sol.region0_sub;
      break;
    }
    case Variant::Cost: {
      CostStreettSolution sol = solve_cost_streett(game);
      cli.solution.region0 = sol.region0;
      cli.solution.region1 = sol.region1;
      cli.solution.strategy0 = sol.certificate;
      cli.solution.strategy1 = InfiniteMemoryStrategy{"use simulate --spoiler"};
      cli.trace = sol.trace;
      cli.region0_for_file = sol.region0;
      break;
    }
  }
  return cli;
}

void print_strategy(std::ostream& out, const Game& game, const CliSolution& cli, int player) {
  const Strategy& strategy = player == 0 ? cli.solution.strategy0 : cli.solution.strategy1;
  const std::string label = "strategy" + std::to_string(player);
  if (std::holds_alternative<InfiniteMemoryStrategy>(strategy)) {
    out << label << ": infinite-memory: use simulate --spoiler\n";
    return;
  }
  if (const auto* p = std::get_if<PositionalStrategy>(&strategy)) {
    out << label << " (positional):\n";
    for (int v = 0; v < game.arena.vertex_count(); ++v)
      if (p->next.size() > static_cast<std::size_t>(v) && p->defined(v))
        out << "  " << game.arena.name(v) << " -> " << game.arena.name(p->at(v)) << "\n";
    return;
  }
  if (const auto* layered = std::get_if<LayeredCertificate>(&strategy)) {
    out << label << " (layered, " << layered->layers.size() << " layers";
    bool positional = true;
    for (const auto& layer : layered->layers)
      if (layer.bounded_fs.has_value()) positional = false;
    if (positional) {
      out << ", flattened):\n";
      PositionalStrategy flat = layered->flatten(game.arena.vertex_count());
      for (int v = 0; v < game.arena.vertex_count(); ++v)
        if (flat.defined(v))
          out << "  " << game.arena.name(v) << " -> " << game.arena.name(flat.at(v)) << "\n";
    } else {
      out << "): finite-state per layer, see --strategy0 output\n";
    }
    return;
  }
  const auto& fs = std::get<FiniteStateStrategy>(strategy);
  const Arena* arena = &game.arena;
  Subdivision sub;
  if (player == 0 && cli.strategy0_subdivided) {
    sub = subdivide(game);
    arena = &sub.game.arena;
  }
  out << label << " (finite-state, " << fs.memory.state_count() << " states";
  if (player == 0 && cli.strategy0_subdivided) out << ", on the subdivided arena";
  out << "):\n";
  out << "  states:";
  for (const std::string& name : fs.memory.state_names) out << " " << name;
  out << "\n";
  for (int v = 0; v < arena->vertex_count(); ++v)
    for (int s = 0; s < fs.memory.state_count(); ++s)
      if (fs.at(v, s) >= 0)
        out << "  " << arena->name(v) << " @" << fs.memory.state_names[static_cast<std::size_t>(s)]
            << " -> " << arena->name(fs.at(v, s)) << "\n";
}

int cmd_solve(const Options& options, std::ostream& out) {
  Game game = load_game(options.positional.at(0), options);
  CliSolution cli = solve_dispatch(game);
  if (options.flag("trace"))
    for (const std::string& line : cli.trace) out << line << "\n";
  out << region_line(game, "W0:", cli.solution.region0) << "\n";
  out << region_line(game, "W1:", cli.solution.region1) << "\n";
  print_strategy(out, game, cli, 0);
  print_strategy(out, game, cli, 1);

  if (auto path = options.value("strategy0")) {
    if (std::holds_alternative<InfiniteMemoryStrategy>(cli.solution.strategy0))
      throw std::runtime_error("strategy0 needs infinite memory and cannot be emitted");
    StrategyFile file{0, cli.region0_for_file, cli.solution.strategy0, cli.strategy0_subdivided};
    write_file(*path, serialize_strategy(game, file));
  }
  if (auto path = options.value("strategy1")) {
    if (std::holds_alternative<InfiniteMemoryStrategy>(cli.solution.strategy1))
      throw std::runtime_error(
          "strategy1 needs infinite memory; use simulate --spoiler instead");
    StrategyFile file{1, cli.solution.region1, cli.solution.strategy1, false};
    write_file(*path, serialize_strategy(game, file));
  }
  return 0;
}

int cmd_verify(const Options& options, std::ostream& out) {
  Game game = load_game(options.positional.at(0), options);
  StrategyFile file = parse_strategy(game, read_file(options.positional.at(1)));
  VerifyResult result;
  if (file.subdivided_arena && !std::holds_alternative<LayeredCertificate>(file.strategy))
    result = verify_bounded_strategy_on_subdivision(game, file.strategy, file.region, file.player);
  else
    result = verify_strategy(game, file.strategy, file.region, file.player);
  if (result.ok) {
    out << "verified\n";
    return 0;
  }
  out << "verification failed: " << result.reason << "\n";
  if (result.counterexample) {
    out << "counterexample:";
    for (int v : result.counterexample->prefix) out << " " << game.arena.name(v);
    out << " |";
    for (int v : result.counterexample->cycle) out << " " << game.arena.name(v);
    out << "\n";
  }
  return 1;
}

int cmd_reduce(const Options& options, std::ostream& out) {
  Game game = load_game(options.positional.at(0), options);
  auto target = options.value("to");
  if (!target) throw std::runtime_error("reduce needs --to (pcrr-parity|streett)");
  if (game.variant != Variant::BoundedCost)
    throw std::runtime_error("reduce applies to the bounded-cost variant");

  Game reduced;
  reduced.variant = Variant::Classical;
  if (*target == "pcrr-parity") {
    if (game.kind != GameKind::Parity) throw std::runtime_error("pcrr-parity expects a parity game");
    Subdivision sub = subdivide(game);
    RequestMemory memory = build_request_memory(sub.game.arena, sub.game.coloring);
    Product product = build_product(sub.game.arena, memory.structure, /*full=*/false);
    std::vector<int> colors =
        pcrr_coloring(product, sub.game.coloring, increment_vertices(sub.game.arena, 0), memory,
                      sub.game.coloring.top_odd());
    reduced.kind = GameKind::Parity;
    reduced.arena = product.arena;
    reduced.arena.cost_dimension = 1;
    for (Edge& edge : reduced.arena.edges) edge.cost = "e";
    reduced.coloring.color = colors;
  } else if (*target == "streett") {
    if (game.kind != GameKind::Streett) throw std::runtime_error("streett expects a streett game");
    Subdivision sub = subdivide(game);
    MemoryStructure memory = build_open_request_memory(sub.game.arena, sub.game.streett);
    Product product = build_product(sub.game.arena, memory, /*full=*/false);
    const int d = game.streett.pair_count;
    reduced.kind = GameKind::Streett;
    reduced.arena = product.arena;
    reduced.streett.pair_count = 2 * d;
    reduced.arena.cost_dimension = 2 * d;
    for (Edge& edge : reduced.arena.edges) edge.cost.assign(static_cast<std::size_t>(2 * d), 'e');
    reduced.streett.request_mask.assign(static_cast<std::size_t>(product.arena.vertex_count()), 0);
    reduced.streett.response_mask.assign(static_cast<std::size_t>(product.arena.vertex_count()), 0);
    std::vector<std::vector<char>> inc;
    for (int c = 0; c < d; ++c) inc.push_back(increment_vertices(sub.game.arena, c));
    for (int q = 0; q < product.arena.vertex_count(); ++q) {
      auto [v, state] = product.vm[static_cast<std::size_t>(q)];
      std::uint32_t open = open_set_of_state(memory, state);
      for (int c = 0; c < d; ++c) {
        bool not_open = ((open >> c) & 1u) == 0;
        if (sub.game.streett.requests(v, c))
          reduced.streett.request_mask[static_cast<std::size_t>(q)] |= 1u << c;
        if (sub.game.streett.responds(v, c) || not_open)
          reduced.streett.response_mask[static_cast<std::size_t>(q)] |= 1u << c;
        if (inc[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)])
          reduced.streett.request_mask[static_cast<std::size_t>(q)] |= 1u << (d + c);
        if (not_open)
          reduced.streett.response_mask[static_cast<std::size_t>(q)] |= 1u << (d + c);
      }
    }
  } else {
    throw std::runtime_error("unknown reduction target '" + *target + "'");
  }
  out << serialize_game(reduced);
  return 0;
}

int cmd_generate(const Options& options, std::ostream& out) {
  const std::string& what = options.positional.at(0);
  if (what == "lower-parity" || what == "lower-streett") {
    int d = std::stoi(options.value("d").value_or("1"));
    Game game = what == "lower-parity" ? make_lower_bound_parity_game(d)
                                       : make_lower_bound_streett_game(d);
    out << serialize_game(game);
    return 0;
  }
  if (what != "random") throw std::runtime_error("unknown generator '" + what + "'");
  RandomGameSpec spec;
  if (auto v = options.value("kind"))
    spec.kind = *v == "streett" ? GameKind::Streett : GameKind::Parity;
  if (auto v = options.value("variant")) {
    if (*v == "classical") spec.variant = Variant::Classical;
    else if (*v == "cost") spec.variant = Variant::Cost;
    else if (*v == "bounded-cost") spec.variant = Variant::BoundedCost;
    else throw std::runtime_error("unknown variant '" + *v + "'");
  }
  if (auto v = options.value("seed")) spec.seed = std::stoull(*v);
  if (auto v = options.value("vertices")) spec.vertices = std::stoi(*v);
  if (auto v = options.value("density")) spec.density = std::stod(*v);
  if (auto v = options.value("colors")) spec.max_color = std::stoi(*v);
  if (auto v = options.value("pairs")) spec.pairs = std::stoi(*v);
  if (auto v = options.value("increment-prob")) spec.increment_prob = std::stod(*v);
  if (auto v = options.value("membership-prob")) spec.membership_prob = std::stod(*v);
  out << serialize_game(generate_random_game(spec));
  return 0;
}

int cmd_simulate(const Options& options, std::ostream& out) {
  Game game = load_game(options.positional.at(0), options);
  if (!options.flag("spoiler")) throw std::runtime_error("simulate currently drives --spoiler plays");
  if (game.kind != GameKind::Parity)
    throw std::runtime_error("the spoiler simulates parity games with costs");
  game.variant = Variant::Cost;
  int steps = std::stoi(options.value("steps").value_or("100"));

  CostParitySolution solution = solve_cost_parity(game);
  if (solution.region1.empty())
    throw std::runtime_error("Player 1 wins nowhere; nothing to spoil");
  int start = solution.region1.front();
  if (auto name = options.value("start")) {
    start = game.arena.find_vertex(*name);
    if (start < 0) throw std::runtime_error("unknown start vertex '" + *name + "'");
  }

  SpoilerDriver spoiler(game, solution);
  FirstSuccessorDriver opponent(game.arena);
  std::vector<PlayStep> trace = simulate_play(game, &opponent, &spoiler, start, steps);
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const PlayStep& step = trace[k];
    out << k << ": " << game.arena.name(step.vertex) << " request=";
    if (step.request_color < 0)
      out << "-";
    else
      out << step.request_color;
    out << " cost=" << step.cost_since_request << " b=" << step.spoiler_bound << "\n";
  }
  return 0;
}

int cmd_oracle_check(const Options& options, std::ostream& out) {
  Game game = load_game(options.positional.at(0), options);
  std::vector<int> left0, right0;
  std::string description;
  if (game.variant == Variant::Classical) {
    if (game.kind == GameKind::Parity) {
      left0 = solve_parity(game.arena, game.coloring).region(0);
      right0 = parity_oracle_enumerate(game.arena, game.coloring);
      description = "solver vs strategy enumeration";
    } else {
      left0 = solve_streett(game.arena, game.streett).region0;
      right0 = streett_oracle_enumerate(game.arena, game.streett).region0;
      description = "solver vs strategy enumeration";
    }
  } else {
    ParityBackend oracle = enumeration_backend(0);
    description = "pipeline with recursive backend vs enumeration backend";
    if (game.kind == GameKind::Parity) {
      if (game.variant == Variant::BoundedCost) {
        left0 = solve_bounded_cost_parity(game).region0;
        right0 = solve_bounded_cost_parity(game, oracle).region0;
      } else {
        left0 = solve_cost_parity(game).region0;
        right0 = solve_cost_parity(game, oracle).region0;
      }
    } else {
      if (game.variant == Variant::BoundedCost) {
        left0 = solve_bounded_cost_streett(game).region0;
        right0 = solve_bounded_cost_streett(game, oracle).region0;
      } else {
        left0 = solve_cost_streett(game).region0;
        right0 = solve_cost_streett(game, oracle).region0;
      }
    }
  }
  if (left0 == right0) {
    out << "oracle-check: agree (" << description << ")\n";
    out << region_line(game, "W0:", left0) << "\n";
    return 0;
  }
  out << "oracle-check: DISAGREE (" << description << ")\n";
  out << region_line(game, "solver W0:", left0) << "\n";
  out << region_line(game, "oracle W0:", right0) << "\n";
  return 1;
}

int cmd_dot(const Options& options, std::ostream& out) {
  Game game = load_game(options.positional.at(0), options);
  if (options.flag("solve")) {
    CliSolution cli = solve_dispatch(game);
    out << export_dot(game, &cli.solution);
  } else {
    out << export_dot(game);
  }
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << kUsage;
    return 2;
  }
  const std::string& command = args[0];
  const std::vector<std::string> value_keys = {
      "variant", "steps", "start", "seed", "vertices", "density", "colors",
      "pairs", "increment-prob", "membership-prob", "d", "to", "strategy0",
      "strategy1", "kind"};
  const std::vector<std::string> flag_keys = {"trace", "spoiler", "solve"};
  try {
    Options options = parse_options(args, 1, value_keys, flag_keys);
    auto need = [&](std::size_t count) {
      if (options.positional.size() < count) throw std::runtime_error("missing arguments");
    };
    if (command == "solve") {
      need(1);
      return cmd_solve(options, out);
    }
    if (command == "verify") {
      need(2);
      return cmd_verify(options, out);
    }
    if (command == "reduce") {
      need(1);
      return cmd_reduce(options, out);
    }
    if (command == "generate") {
      need(1);
      return cmd_generate(options, out);
    }
    if (command == "simulate") {
      need(1);
      return cmd_simulate(options, out);
    }
    if (command == "oracle-check") {
      need(1);
      return cmd_oracle_check(options, out);
    }
    if (command == "dot") {
      need(1);
      return cmd_dot(options, out);
    }
    err << kUsage;
    return 2;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  }
}

}  // namespace costly
