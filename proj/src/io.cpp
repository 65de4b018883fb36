#include "costly/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "costly/graph_ops.hpp"

namespace costly {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

[[noreturn]] void fail(int line_number, const std::string& message) {
  throw std::runtime_error("line " + std::to_string(line_number) + ": " + message);
}

// "owner=1" -> value for key "owner"; empty optional when the key differs.
std::optional<std::string> key_value(const std::string& token, const std::string& key) {
  if (token.size() > key.size() + 1 && token.compare(0, key.size(), key) == 0 &&
      token[key.size()] == '=')
    return token.substr(key.size() + 1);
  return std::nullopt;
}

std::uint32_t parse_pair_list(const std::string& text, int pair_count, int line_number) {
  std::uint32_t mask = 0;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    if (item.empty()) fail(line_number, "empty pair index");
    char* end = nullptr;
    long value = std::strtol(item.c_str(), &end, 10);
    if (!end || *end != '\0' || value < 0 || value >= pair_count)
      fail(line_number, "pair index '" + item + "' out of range");
    mask |= 1u << value;
  }
  return mask;
}

GameKind parse_kind(const std::string& text, int line_number) {
  if (text == "parity") return GameKind::Parity;
  if (text == "streett") return GameKind::Streett;
  fail(line_number, "unknown game kind '" + text + "'");
}

Variant parse_variant_token(const std::string& text, int line_number) {
  if (text == "classical") return Variant::Classical;
  if (text == "cost") return Variant::Cost;
  if (text == "bounded-cost") return Variant::BoundedCost;
  fail(line_number, "unknown variant '" + text + "'");
}

}  // namespace

Game parse_game(const std::string& text) {
  Game game;
  std::map<std::string, int> vertex_of;
  bool saw_header = false;
  bool saw_pairs = false;
  bool saw_vertex = false;

  std::istringstream stream(text);
  std::string raw;
  int line_number = 0;
  while (std::getline(stream, raw)) {
    ++line_number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> tokens = tokenize(raw);
    if (tokens.empty()) continue;

    if (!saw_header) {
      if (tokens[0] != "game" || tokens.size() != 3) fail(line_number, "expected 'game <kind> <variant>'");
      game.kind = parse_kind(tokens[1], line_number);
      game.variant = parse_variant_token(tokens[2], line_number);
      saw_header = true;
      continue;
    }

    if (tokens[0] == "pairs") {
      if (game.kind != GameKind::Streett) fail(line_number, "'pairs' only applies to streett games");
      if (saw_vertex) fail(line_number, "'pairs' must precede the vertices");
      if (tokens.size() != 2) fail(line_number, "expected 'pairs <d>'");
      game.streett.pair_count = std::stoi(tokens[1]);
      if (game.streett.pair_count < 1 || game.streett.pair_count > 31)
        fail(line_number, "pair count out of range");
      game.arena.cost_dimension = game.streett.pair_count;
      saw_pairs = true;
      continue;
    }

    if (tokens[0] == "vertex") {
      if (game.kind == GameKind::Streett && !saw_pairs)
        fail(line_number, "streett games declare 'pairs' before vertices");
      if (tokens.size() < 3) fail(line_number, "expected 'vertex <id> owner=<0|1> ...'");
      const std::string& id = tokens[1];
      if (vertex_of.count(id)) fail(line_number, "duplicate vertex '" + id + "'");
      int owner = -1, color = -1;
      std::uint32_t q_mask = 0, p_mask = 0;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        if (auto v = key_value(tokens[i], "owner"))
          owner = *v == "0" ? 0 : (*v == "1" ? 1 : -1);
        else if (auto c = key_value(tokens[i], "color"))
          color = std::stoi(*c);
        else if (auto q = key_value(tokens[i], "Q"))
          q_mask = parse_pair_list(*q, game.streett.pair_count, line_number);
        else if (auto p = key_value(tokens[i], "P"))
          p_mask = parse_pair_list(*p, game.streett.pair_count, line_number);
        else
          fail(line_number, "unknown vertex field '" + tokens[i] + "'");
      }
      if (owner < 0) fail(line_number, "vertex '" + id + "' needs owner=0 or owner=1");
      if (game.kind == GameKind::Parity && color < 0)
        fail(line_number, "vertex '" + id + "' needs a color");
      int v = game.arena.add_vertex(id, owner);
      vertex_of.emplace(id, v);
      saw_vertex = true;
      if (game.kind == GameKind::Parity) {
        game.coloring.color.push_back(color);
      } else {
        game.streett.request_mask.push_back(q_mask);
        game.streett.response_mask.push_back(p_mask);
      }
      continue;
    }

    if (tokens[0] == "edge") {
      if (tokens.size() < 3) fail(line_number, "expected 'edge <src> <dst> [cost=...]'");
      auto src = vertex_of.find(tokens[1]);
      auto dst = vertex_of.find(tokens[2]);
      if (src == vertex_of.end()) fail(line_number, "unknown vertex '" + tokens[1] + "'");
      if (dst == vertex_of.end()) fail(line_number, "unknown vertex '" + tokens[2] + "'");
      CostLabel cost(static_cast<std::size_t>(game.arena.cost_dimension), 'e');
      bool saw_cost = false;
      for (std::size_t i = 3; i < tokens.size(); ++i) {
        if (auto c = key_value(tokens[i], "cost")) {
          cost = *c;
          saw_cost = true;
        } else {
          fail(line_number, "unknown edge field '" + tokens[i] + "'");
        }
      }
      if (!saw_cost && game.variant != Variant::Classical)
        fail(line_number, "cost label required outside the classical variant");
      if (static_cast<int>(cost.size()) != game.arena.cost_dimension)
        fail(line_number, "cost label must have length " +
                              std::to_string(game.arena.cost_dimension));
      for (char c : cost)
        if (c != 'e' && c != 'i') fail(line_number, "cost label uses only 'e' and 'i'");
      if (game.arena.edge_between(src->second, dst->second) >= 0)
        fail(line_number, "duplicate edge");
      game.arena.add_edge(src->second, dst->second, cost);
      continue;
    }

    fail(line_number, "unknown directive '" + tokens[0] + "'");
  }
  if (!saw_header) fail(1, "expected 'game <kind> <variant>'");
  return game;
}

std::string serialize_game(const Game& game) {
  std::ostringstream out;
  out << "game " << to_string(game.kind) << " " << to_string(game.variant) << "\n";
  if (game.kind == GameKind::Streett) out << "pairs " << game.streett.pair_count << "\n";
  for (int v = 0; v < game.arena.vertex_count(); ++v) {
    out << "vertex " << game.arena.name(v) << " owner=" << game.arena.owner[static_cast<std::size_t>(v)];
    if (game.kind == GameKind::Parity) {
      out << " color=" << game.coloring.at(v);
    } else {
      auto emit = [&](const char* key, std::uint32_t mask) {
        if (!mask) return;
        out << " " << key << "=";
        bool first = true;
        for (int c = 0; c < game.streett.pair_count; ++c)
          if ((mask >> c) & 1u) {
            if (!first) out << ",";
            out << c;
            first = false;
          }
      };
      emit("Q", game.streett.request_mask[static_cast<std::size_t>(v)]);
      emit("P", game.streett.response_mask[static_cast<std::size_t>(v)]);
    }
    out << "\n";
  }
  for (const Edge& edge : game.arena.edges)
    out << "edge " << game.arena.name(edge.src) << " " << game.arena.name(edge.dst)
        << " cost=" << edge.cost << "\n";
  return out.str();
}

std::string export_dot(const Game& game, const GameSolution* solution) {
  std::vector<char> in0, in1;
  const PositionalStrategy* bold0 = nullptr;
  const PositionalStrategy* bold1 = nullptr;
  PositionalStrategy flat0;
  if (solution) {
    in0 = to_mask(game.arena.vertex_count(), solution->region0);
    in1 = to_mask(game.arena.vertex_count(), solution->region1);
    if (const auto* p = std::get_if<PositionalStrategy>(&solution->strategy0)) bold0 = p;
    if (const auto* layered = std::get_if<LayeredCertificate>(&solution->strategy0)) {
      flat0 = layered->flatten(game.arena.vertex_count());
      bold0 = &flat0;
    }
    if (const auto* p = std::get_if<PositionalStrategy>(&solution->strategy1)) bold1 = p;
  }

  std::ostringstream out;
  out << "digraph game {\n";
  out << "  rankdir=LR;\n";
  for (int v = 0; v < game.arena.vertex_count(); ++v) {
    out << "  \"" << game.arena.name(v) << "\" [shape="
        << (game.arena.owner[static_cast<std::size_t>(v)] == 0 ? "circle" : "box");
    out << ",label=\"" << game.arena.name(v);
    if (game.kind == GameKind::Parity) {
      out << "\\n" << game.coloring.at(v);
    } else {
      for (int c = 0; c < game.streett.pair_count; ++c) {
        if (game.streett.requests(v, c)) out << "\\nQ" << c;
        if (game.streett.responds(v, c)) out << "\\nP" << c;
      }
    }
    out << "\"";
    if (solution) {
      out << ",style=filled,fillcolor="
          << (in0[static_cast<std::size_t>(v)] ? "lightblue" : "lightsalmon");
    }
    out << "];\n";
  }
  for (const Edge& edge : game.arena.edges) {
    out << "  \"" << game.arena.name(edge.src) << "\" -> \"" << game.arena.name(edge.dst) << "\"";
    std::string label = edge.cost;
    if (game.arena.cost_dimension == 1) label = is_increment(edge.cost, 0) ? "i" : "ε";
    out << " [label=\"" << label << "\"";
    auto bold = [&](const PositionalStrategy* strategy) {
      return strategy && strategy->next.size() > static_cast<std::size_t>(edge.src) &&
             strategy->at(edge.src) == edge.dst;
    };
    if (bold(bold0) || bold(bold1)) out << ",penwidth=2";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

void serialize_positional(std::ostringstream& out, const Arena& arena,
                          const PositionalStrategy& strategy) {
  for (int v = 0; v < arena.vertex_count(); ++v)
    if (strategy.next.size() > static_cast<std::size_t>(v) && strategy.defined(v))
      out << "move " << arena.name(v) << " " << arena.name(strategy.at(v)) << "\n";
}

void serialize_fs(std::ostringstream& out, const Arena& arena, const FiniteStateStrategy& fs) {
  out << "states";
  for (const std::string& name : fs.memory.state_names) out << " " << name;
  out << "\n";
  for (int v = 0; v < arena.vertex_count(); ++v)
    out << "init " << arena.name(v) << " "
        << fs.memory.state_names[static_cast<std::size_t>(fs.memory.init[static_cast<std::size_t>(v)])]
        << "\n";
  for (int s = 0; s < fs.memory.state_count(); ++s)
    for (int v = 0; v < arena.vertex_count(); ++v)
      out << "update " << fs.memory.state_names[static_cast<std::size_t>(s)] << " "
          << arena.name(v) << " "
          << fs.memory.state_names[static_cast<std::size_t>(fs.memory.run(s, v))] << "\n";
  for (int v = 0; v < arena.vertex_count(); ++v)
    for (int s = 0; s < fs.memory.state_count(); ++s)
      if (fs.at(v, s) >= 0)
        out << "next " << arena.name(v) << " "
            << fs.memory.state_names[static_cast<std::size_t>(s)] << " "
            << arena.name(fs.at(v, s)) << "\n";
}

struct FsParser {
  const Arena& arena;
  FiniteStateStrategy fs;
  std::map<std::string, int> state_of;

  explicit FsParser(const Arena& a, int player) : arena(a) {
    fs.player = player;
  }

  int vertex(const std::string& name, int line) {
    int v = arena.find_vertex(name);
    if (v < 0) fail(line, "unknown vertex '" + name + "'");
    return v;
  }
  int state(const std::string& name, int line) {
    auto it = state_of.find(name);
    if (it == state_of.end()) fail(line, "unknown state '" + name + "'");
    return it->second;
  }

  void feed(const std::vector<std::string>& tokens, int line) {
    if (tokens[0] == "states") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (state_of.count(tokens[i])) fail(line, "duplicate state '" + tokens[i] + "'");
        state_of.emplace(tokens[i], static_cast<int>(fs.memory.state_names.size()));
        fs.memory.state_names.push_back(tokens[i]);
      }
      fs.memory.init.assign(static_cast<std::size_t>(arena.vertex_count()), 0);
      fs.memory.update.assign(fs.memory.state_names.size(),
                              std::vector<int>(static_cast<std::size_t>(arena.vertex_count()), 0));
      fs.next_move.assign(static_cast<std::size_t>(arena.vertex_count()),
                          std::vector<int>(fs.memory.state_names.size(), -1));
    } else if (tokens[0] == "init" && tokens.size() == 3) {
      fs.memory.init[static_cast<std::size_t>(vertex(tokens[1], line))] = state(tokens[2], line);
    } else if (tokens[0] == "update" && tokens.size() == 4) {
      fs.memory.update[static_cast<std::size_t>(state(tokens[1], line))]
                      [static_cast<std::size_t>(vertex(tokens[2], line))] = state(tokens[3], line);
    } else if (tokens[0] == "next" && tokens.size() == 4) {
      fs.next_move[static_cast<std::size_t>(vertex(tokens[1], line))]
                  [static_cast<std::size_t>(state(tokens[2], line))] = vertex(tokens[3], line);
    } else {
      fail(line, "unknown strategy directive '" + tokens[0] + "'");
    }
  }
};

}  // namespace

std::string serialize_strategy(const Game& game, const StrategyFile& file) {
  std::ostringstream out;
  const char* kind = "positional";
  if (std::holds_alternative<FiniteStateStrategy>(file.strategy)) kind = "finite-state";
  if (std::holds_alternative<LayeredCertificate>(file.strategy)) kind = "layered";
  out << "strategy player=" << file.player << " kind=" << kind
      << " arena=" << (file.subdivided_arena ? "subdivided" : "original") << "\n";

  const Arena* arena = &game.arena;
  Subdivision sub;
  if (file.subdivided_arena) {
    sub = subdivide(game);
    arena = &sub.game.arena;
  }
  out << "region";
  for (int v : file.region) out << " " << arena->name(v);
  out << "\n";

  if (const auto* p = std::get_if<PositionalStrategy>(&file.strategy)) {
    serialize_positional(out, *arena, *p);
  } else if (const auto* f = std::get_if<FiniteStateStrategy>(&file.strategy)) {
    serialize_fs(out, *arena, *f);
  } else if (const auto* layered = std::get_if<LayeredCertificate>(&file.strategy)) {
    out << "layers " << layered->layers.size() << "\n";
    std::vector<int> covered;
    for (std::size_t j = 0; j < layered->layers.size(); ++j) {
      const CertificateLayer& layer = layered->layers[j];
      out << "layer " << (j + 1) << "\n";
      out << "x";
      for (int v : layer.x) out << " " << game.arena.name(v);
      out << "\n";
      out << "attr";
      for (int v : layer.attr) out << " " << game.arena.name(v);
      out << "\n";
      for (int v : layer.attr)
        out << "rank " << game.arena.name(v) << " " << layer.rank[static_cast<std::size_t>(v)]
            << "\n";
      for (int v = 0; v < game.arena.vertex_count(); ++v)
        if (layer.attractor_moves.next.size() > static_cast<std::size_t>(v) &&
            layer.attractor_moves.defined(v))
          out << "attrmove " << game.arena.name(v) << " "
              << game.arena.name(layer.attractor_moves.at(v)) << "\n";
      if (layer.bounded_fs.has_value()) {
        // The layer strategy lives on the subdivided arena of the layer's
        // subgame, reconstructed deterministically from the covered set.
        Game parent = game;
        Subgame layer_subgame = remove_region(parent, covered);
        Subdivision layer_sub = subdivide(layer_subgame.game);
        std::ostringstream inner;
        serialize_fs(inner, layer_sub.game.arena, *layer.bounded_fs);
        out << "fs-begin\n" << inner.str() << "fs-end\n";
      } else {
        std::ostringstream inner;
        serialize_positional(inner, game.arena, layer.bounded);
        out << inner.str();
      }
      out << "endlayer\n";
      for (int v : layer.attr) covered.push_back(v);
      std::sort(covered.begin(), covered.end());
    }
  }
  return out.str();
}

StrategyFile parse_strategy(const Game& game, const std::string& text) {
  StrategyFile file;
  std::istringstream stream(text);
  std::string raw;
  int line_number = 0;

  auto next_tokens = [&](std::vector<std::string>& tokens) {
    while (std::getline(stream, raw)) {
      ++line_number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      tokens = tokenize(raw);
      if (!tokens.empty()) return true;
    }
    return false;
  };

  std::vector<std::string> tokens;
  if (!next_tokens(tokens) || tokens[0] != "strategy")
    fail(line_number, "expected 'strategy player=.. kind=.. arena=..'");
  std::string kind;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (auto p = key_value(tokens[i], "player"))
      file.player = std::stoi(*p);
    else if (auto k = key_value(tokens[i], "kind"))
      kind = *k;
    else if (auto a = key_value(tokens[i], "arena"))
      file.subdivided_arena = *a == "subdivided";
    else
      fail(line_number, "unknown strategy field '" + tokens[i] + "'");
  }

  Subdivision sub;
  const Arena* arena = &game.arena;
  if (file.subdivided_arena) {
    sub = subdivide(game);
    arena = &sub.game.arena;
  }

  if (!next_tokens(tokens) || tokens[0] != "region") fail(line_number, "expected 'region ...'");
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    int v = arena->find_vertex(tokens[i]);
    if (v < 0) fail(line_number, "unknown vertex '" + tokens[i] + "'");
    file.region.push_back(v);
  }

  if (kind == "positional") {
    PositionalStrategy strategy;
    strategy.player = file.player;
    strategy.next.assign(static_cast<std::size_t>(arena->vertex_count()), -1);
    while (next_tokens(tokens)) {
      if (tokens[0] != "move" || tokens.size() != 3) fail(line_number, "expected 'move <v> <u>'");
      int v = arena->find_vertex(tokens[1]);
      int u = arena->find_vertex(tokens[2]);
      if (v < 0 || u < 0) fail(line_number, "unknown vertex in move");
      strategy.next[static_cast<std::size_t>(v)] = u;
    }
    file.strategy = std::move(strategy);
  } else if (kind == "finite-state") {
    FsParser parser(*arena, file.player);
    while (next_tokens(tokens)) parser.feed(tokens, line_number);
    file.strategy = std::move(parser.fs);
  } else if (kind == "layered") {
    LayeredCertificate certificate;
    certificate.player = file.player;
    if (!next_tokens(tokens) || tokens[0] != "layers") fail(line_number, "expected 'layers <n>'");
    int layer_count = std::stoi(tokens[1]);
    std::vector<int> covered;
    for (int j = 0; j < layer_count; ++j) {
      CertificateLayer layer;
      layer.rank.assign(static_cast<std::size_t>(game.arena.vertex_count()), -1);
      layer.bounded.player = 0;
      layer.bounded.next.assign(static_cast<std::size_t>(game.arena.vertex_count()), -1);
      layer.attractor_moves.player = 0;
      layer.attractor_moves.next.assign(static_cast<std::size_t>(game.arena.vertex_count()), -1);
      if (!next_tokens(tokens) || tokens[0] != "layer") fail(line_number, "expected 'layer <j>'");

      Subgame layer_subgame = remove_region(game, covered);
      Subdivision layer_sub = subdivide(layer_subgame.game);
      std::optional<FsParser> fs_parser;
      bool in_fs = false;

      while (next_tokens(tokens)) {
        if (tokens[0] == "endlayer") break;
        if (tokens[0] == "fs-begin") {
          fs_parser.emplace(layer_sub.game.arena, 0);
          in_fs = true;
          continue;
        }
        if (tokens[0] == "fs-end") {
          in_fs = false;
          continue;
        }
        if (in_fs) {
          fs_parser->feed(tokens, line_number);
          continue;
        }
        auto orig_vertex = [&](const std::string& name) {
          int v = game.arena.find_vertex(name);
          if (v < 0) fail(line_number, "unknown vertex '" + name + "'");
          return v;
        };
        if (tokens[0] == "x") {
          for (std::size_t i = 1; i < tokens.size(); ++i) layer.x.push_back(orig_vertex(tokens[i]));
        } else if (tokens[0] == "attr") {
          for (std::size_t i = 1; i < tokens.size(); ++i)
            layer.attr.push_back(orig_vertex(tokens[i]));
        } else if (tokens[0] == "rank" && tokens.size() == 3) {
          layer.rank[static_cast<std::size_t>(orig_vertex(tokens[1]))] = std::stoi(tokens[2]);
        } else if (tokens[0] == "attrmove" && tokens.size() == 3) {
          layer.attractor_moves.next[static_cast<std::size_t>(orig_vertex(tokens[1]))] =
              orig_vertex(tokens[2]);
        } else if (tokens[0] == "move" && tokens.size() == 3) {
          layer.bounded.next[static_cast<std::size_t>(orig_vertex(tokens[1]))] =
              orig_vertex(tokens[2]);
        } else {
          fail(line_number, "unknown layer directive '" + tokens[0] + "'");
        }
      }
      if (fs_parser) layer.bounded_fs = std::move(fs_parser->fs);
      for (int v : layer.attr) covered.push_back(v);
      std::sort(covered.begin(), covered.end());
      certificate.layers.push_back(std::move(layer));
    }
    file.strategy = std::move(certificate);
  } else {
    fail(line_number, "unknown strategy kind '" + kind + "'");
  }
  return file;
}

}  // namespace costly
