#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "costly/condition.hpp"
#include "costly/strategy.hpp"

namespace costly {

/// Score sheets (c, n, s_top, s_top-2, ..., s_1): the largest open request,
/// the increments since it was raised, and per odd color how often it was
/// seen since the last increment edge, all capped and ordered
/// lexicographically with bottom/top sentinels.
struct SheetSpace {
  int top_color = 1;  // odd bound on the colors
  int cap = 1;        // bound for every coordinate but the first

  int coord_count() const { return 2 + (top_color + 1) / 2; }
  /// 1-based coordinate holding the score of odd color c.
  int coordinate_of_color(int c) const { return 2 + (top_color - c) / 2 + 1; }
  bool full(int coordinate, int value) const {
    return coordinate == 1 ? value == top_color : value == cap;
  }
};

struct Sheet {
  enum Kind : std::int8_t { kBottom = -1, kProper = 0, kTop = 1 };
  Kind kind = kBottom;
  std::vector<int> x;  // coordinates, proper sheets only

  static Sheet bottom() { return Sheet{}; }
  static Sheet top() { return Sheet{kTop, {}}; }

  friend std::strong_ordering operator<=>(const Sheet& a, const Sheet& b);
  friend bool operator==(const Sheet& a, const Sheet& b) = default;
};

struct SheetIncrement {
  Sheet sheet;
  // Inclusive 1-based range of coordinates that overflowed, empty if lo > hi.
  int overflow_lo = 1;
  int overflow_hi = 0;
};

/// Overflow increment at coordinate k: bump the largest non-full coordinate
/// <= k and zero everything behind it; all-full yields top. Rejects the
/// sentinels.
SheetIncrement sheet_increment(const SheetSpace& space, const Sheet& sheet, int k);

Sheet initial_sheet(const SheetSpace& space, int color);

/// One play step: absorb top, restart bottom at the next vertex, reset when
/// the next color beats the open request, count increments on coordinate 2,
/// zero answered scores on free even steps, bump the color's score on free
/// odd steps.
Sheet sheet_step(const SheetSpace& space, const Sheet& sheet, bool increment_edge,
                 int next_color);

/// Sheet of a nonempty play prefix (fold of initial_sheet and sheet_step).
Sheet sheet_of_prefix(const SheetSpace& space, const Game& game, const std::vector<int>& prefix);

/// Sheet space a finite-state strategy of the given memory size is measured
/// in: the cap is |V of the subdivided arena| * memory size.
SheetSpace sheet_space_for(const Game& game, int memory_size);

/// Turns a finite-state Player-0 strategy that wins the bounded game from
/// `winning_from` into a positional one: explores all reachable
/// (vertex, memory, sheet) triples, and from each vertex plays like the
/// triple with the lexicographically maximal sheet (ties to the smallest
/// memory state). Checks the precondition with the certificate checker,
/// throws std::runtime_error if the strategy is not winning or the
/// exploration exceeds `state_budget`, and verifies the result before
/// returning it.
PositionalStrategy positionalize(const Game& game, const FiniteStateStrategy& sigma,
                                 const std::vector<int>& winning_from,
                                 std::int64_t state_budget = 0);

}  // namespace costly
