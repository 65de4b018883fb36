#pragma once

#include <string>
#include <vector>

namespace costly {

// Edge cost labels: one character per cost dimension, 'e' (free) or 'i'
// (increment). Parity games use a single dimension.
using CostLabel = std::string;

inline bool is_increment(const CostLabel& label, int dim) {
  return label[static_cast<std::size_t>(dim)] == 'i';
}

inline bool all_epsilon(const CostLabel& label) {
  return label.find('i') == std::string::npos;
}

struct Edge {
  int src = -1;
  int dst = -1;
  CostLabel cost;
};

/// A finite directed game arena with an owner per vertex. Vertices are dense
/// indices in declaration order; that order is the tie-break and output order
/// everywhere. Every vertex is required to have an outgoing edge.
struct Arena {
  std::vector<std::string> names;
  std::vector<int> owner;             // 0 or 1
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out;  // vertex -> outgoing edge indices
  std::vector<std::vector<int>> in;   // vertex -> incoming edge indices
  int cost_dimension = 1;

  int vertex_count() const { return static_cast<int>(names.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  int add_vertex(std::string name, int who);
  int add_edge(int src, int dst, CostLabel cost);
  int add_edge(int src, int dst);  // all-epsilon label

  int find_vertex(const std::string& name) const;  // -1 if absent
  int edge_between(int src, int dst) const;        // -1 if absent
  std::vector<int> successors(int v) const;        // targets in edge order
  const std::string& name(int v) const { return names[static_cast<std::size_t>(v)]; }
};

/// Arena invariant violations, as data; an empty list means well-formed.
std::vector<std::string> validate_arena(const Arena& arena);

/// Vertices with an incoming increment edge in the given dimension. On a
/// subdivided arena these are exactly the increment-vertices of that
/// dimension.
std::vector<char> increment_vertices(const Arena& arena, int dim);

// Set helpers shared by the solvers: regions are sorted index lists,
// masks are per-vertex flags.
std::vector<char> to_mask(int n, const std::vector<int>& set);
std::vector<int> to_sorted_list(const std::vector<char>& mask);

}  // namespace costly
