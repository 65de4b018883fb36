#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>

#include "costly/graph_ops.hpp"
#include "costly/parity.hpp"

namespace costly {

/// Memory tracking the largest unanswered request (state 0 is "none").
struct RequestMemory {
  MemoryStructure structure;
  std::vector<int> state_color;  // per state: the open request, -1 for none
  int none_state = 0;

  int state_of_color(int color) const;
};

RequestMemory build_request_memory(const Arena& arena, const ParityColoring& coloring);

/// Coloring of the request-memory product that encodes the
/// parity/co-Buechi/request-response relaxation: answered-everything beats
/// all, an increment-vertex under an open request beats the base colors.
std::vector<int> pcrr_coloring(const Product& product, const ParityColoring& base,
                               const std::vector<char>& increment_vertex,
                               const RequestMemory& memory, int top_odd);

struct BoundedCostSolution {
  // Regions in original-game coordinates.
  std::vector<int> region0;
  std::vector<int> region1;
  PositionalStrategy strategy0;       // Player 0, positional, original arena
  FiniteStateStrategy strategy0_fs;   // Player 0 over the request memory, original arena
  FiniteStateStrategy strategy1;      // Player 1 over the request memory, original arena

  // Pipeline internals, exposed for verification and diagnostics.
  Subdivision sub;
  RequestMemory memory;       // over the subdivided arena
  Product product;            // full product
  std::vector<int> product_color;
  ParitySolution product_solution;
  std::vector<int> region0_sub;  // subdivided coordinates
  std::vector<int> region1_sub;
};

/// Subdivide, build the full request-memory product, solve it as a parity
/// game, and project the answer back. Requires a single cost dimension.
BoundedCostSolution solve_bounded_cost_parity(const Game& game,
                                              const ParityBackend& backend = {});

/// Worst-memory extraction: orders the memory states, checks that the product
/// winning region is downward closed in the memory coordinate, and plays from
/// each vertex as if in the largest still-winning state. Throws
/// std::logic_error on a closure violation.
PositionalStrategy extract_positional_max(const BoundedCostSolution& solution);

struct CostParitySolution {
  std::vector<int> region0;
  std::vector<int> region1;
  LayeredCertificate certificate;
  PositionalStrategy strategy0;  // flattened certificate
  std::vector<std::string> trace;
  int iterations = 0;

  // Induced game on region1 and its bounded solution (Player 1 wins it from
  // everywhere); the spoiler driver replays that strategy.
  Subgame final_subgame;
  std::shared_ptr<BoundedCostSolution> final_bounded;
};

/// The fixpoint iteration: repeatedly removes the Player-0 attractor of the
/// bounded game's winning region until it is empty.
CostParitySolution solve_cost_parity(const Game& game, const ParityBackend& backend = {});

/// Stateful play driver for owned vertices.
class PlayDriver {
 public:
  virtual ~PlayDriver() = default;
  virtual void begin(int) {}
  virtual void observe(int) {}
  virtual int choose(int vertex) = 0;
};

class PositionalDriver : public PlayDriver {
 public:
  explicit PositionalDriver(PositionalStrategy strategy) : strategy_(std::move(strategy)) {}
  int choose(int vertex) override;

 private:
  PositionalStrategy strategy_;
};

class FiniteStateDriver : public PlayDriver {
 public:
  explicit FiniteStateDriver(FiniteStateStrategy strategy) : strategy_(std::move(strategy)) {}
  void begin(int start) override;
  void observe(int vertex) override;
  int choose(int vertex) override;
  int state() const { return state_; }

 private:
  FiniteStateStrategy strategy_;
  int state_ = -1;
};

/// Picks the smallest-indexed successor everywhere; the neutral opponent for
/// simulations.
class FirstSuccessorDriver : public PlayDriver {
 public:
  explicit FirstSuccessorDriver(const Arena& arena) : arena_(&arena) {}
  int choose(int vertex) override;

 private:
  const Arena* arena_;
};

/// Player-1 driver for the cost game on region1: replays the uniform
/// finite-state bounded-game strategy of the final subgame and, whenever some
/// request has stayed open across more than `bound` increment edges of the
/// recorded suffix, increments the bound and restarts the strategy from the
/// current vertex.
class SpoilerDriver : public PlayDriver {
 public:
  SpoilerDriver(const Game& game, const CostParitySolution& solution,
                std::size_t suffix_cap = 1'000'000);

  void begin(int start) override;
  void observe(int vertex) override;
  int choose(int vertex) override;

  std::int64_t bound() const { return bound_; }
  const std::deque<int>& suffix() const { return suffix_; }

 private:
  void reset_at(int vertex);
  void append(int vertex);

  const Game* game_;
  std::vector<char> in_region1_;
  std::vector<int> to_sub_;  // original vertex -> final-subgame vertex
  Subgame subgame_;
  FiniteStateStrategy tau_;  // over the final subgame's arena
  std::size_t suffix_cap_;

  std::int64_t bound_ = 1;
  std::deque<int> suffix_;            // original vertices
  int memory_state_ = -1;             // tau's request-memory state
  std::map<int, std::int64_t> open_;  // open request color -> increments since raised
  bool started_ = false;
};

struct PlayStep {
  int vertex = -1;
  int request_state = -1;              // request-memory state index
  int request_color = -1;              // open request color, -1 if none
  std::int64_t cost_since_request = 0; // increments while a request stayed open
  std::int64_t spoiler_bound = -1;     // -1 when no spoiler drives the play
};

/// Deterministic trace of `steps` moves from `start`; annotations follow the
/// request memory of the game's coloring. Throws if a driver is missing or
/// undefined at an owned vertex.
std::vector<PlayStep> simulate_play(const Game& game, PlayDriver* driver0, PlayDriver* driver1,
                                    int start, int steps);

/// Largest number of increment edges (dimension 0) any single request stays
/// open across within the trace.
std::int64_t max_open_request_cost(const Game& game, const std::vector<int>& trace);

}  // namespace costly
