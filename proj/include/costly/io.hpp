#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "costly/condition.hpp"
#include "costly/strategy.hpp"

namespace costly {

/// Parses the line-based game format. Errors carry 1-based line numbers.
///
///   game (parity|streett) (classical|cost|bounded-cost)
///   pairs <d>                                   (streett only, before vertices)
///   vertex <id> owner=<0|1> color=<nat>         (parity)
///   vertex <id> owner=<0|1> [Q=<c,...>] [P=<c,...>]   (streett)
///   edge <src> <dst> [cost=<{e,i} string of length d>]
///
/// '#' starts a comment; the cost field is optional for the classical
/// variant and defaults to all-epsilon.
Game parse_game(const std::string& text);

/// Canonical form; parse(serialize(g)) reproduces g exactly.
std::string serialize_game(const Game& game);

/// GraphViz export: circles for Player 0, boxes for Player 1, edge labels i
/// or the epsilon sign; with a solution, regions are colored and strategy
/// edges drawn bold.
std::string export_dot(const Game& game, const GameSolution* solution = nullptr);

struct StrategyFile {
  int player = 0;
  std::vector<int> region;  // claimed winning region
  Strategy strategy;
  bool subdivided_arena = false;  // strategy refers to the subdivided game
};

std::string serialize_strategy(const Game& game, const StrategyFile& file);

/// Parses a strategy file against the game it belongs to (the subdivided one
/// when the header says so).
StrategyFile parse_strategy(const Game& game, const std::string& text);

}  // namespace costly
