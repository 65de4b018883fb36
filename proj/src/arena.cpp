#include "costly/arena.hpp"

#include <stdexcept>

namespace costly {

int Arena::add_vertex(std::string name, int who) {
  names.push_back(std::move(name));
  owner.push_back(who);
  out.emplace_back();
  in.emplace_back();
  return vertex_count() - 1;
}

int Arena::add_edge(int src, int dst, CostLabel cost) {
  if (src < 0 || src >= vertex_count() || dst < 0 || dst >= vertex_count())
    throw std::invalid_argument("add_edge: endpoint out of range");
  int id = edge_count();
  edges.push_back(Edge{src, dst, std::move(cost)});
  out[static_cast<std::size_t>(src)].push_back(id);
  in[static_cast<std::size_t>(dst)].push_back(id);
  return id;
}

int Arena::add_edge(int src, int dst) {
  return add_edge(src, dst, CostLabel(static_cast<std::size_t>(cost_dimension), 'e'));
}

int Arena::find_vertex(const std::string& name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (names[static_cast<std::size_t>(v)] == name) return v;
  return -1;
}

int Arena::edge_between(int src, int dst) const {
  for (int e : out[static_cast<std::size_t>(src)])
    if (edges[static_cast<std::size_t>(e)].dst == dst) return e;
  return -1;
}

std::vector<int> Arena::successors(int v) const {
  std::vector<int> result;
  result.reserve(out[static_cast<std::size_t>(v)].size());
  for (int e : out[static_cast<std::size_t>(v)]) result.push_back(edges[static_cast<std::size_t>(e)].dst);
  return result;
}

std::vector<std::string> validate_arena(const Arena& arena) {
  std::vector<std::string> violations;
  const int n = arena.vertex_count();
  for (int v = 0; v < n; ++v) {
    if (arena.owner[static_cast<std::size_t>(v)] != 0 && arena.owner[static_cast<std::size_t>(v)] != 1)
      violations.push_back("vertex " + arena.name(v) + ": owner must be 0 or 1");
    if (arena.out[static_cast<std::size_t>(v)].empty())
      violations.push_back("vertex " + arena.name(v) + ": no outgoing edge");
  }
  for (int e = 0; e < arena.edge_count(); ++e) {
    const Edge& edge = arena.edges[static_cast<std::size_t>(e)];
    if (edge.src < 0 || edge.src >= n || edge.dst < 0 || edge.dst >= n) {
      violations.push_back("edge #" + std::to_string(e) + ": endpoint out of range");
      continue;
    }
    if (static_cast<int>(edge.cost.size()) != arena.cost_dimension)
      violations.push_back("edge " + arena.name(edge.src) + " -> " + arena.name(edge.dst) +
                           ": cost label length != dimension");
    for (char c : edge.cost)
      if (c != 'e' && c != 'i') {
        violations.push_back("edge " + arena.name(edge.src) + " -> " + arena.name(edge.dst) +
                             ": cost label characters must be e or i");
        break;
      }
    for (int other : arena.out[static_cast<std::size_t>(edge.src)])
      if (other < e && arena.edges[static_cast<std::size_t>(other)].dst == edge.dst) {
        violations.push_back("edge " + arena.name(edge.src) + " -> " + arena.name(edge.dst) +
                             ": duplicate");
        break;
      }
  }
  return violations;
}

std::vector<char> increment_vertices(const Arena& arena, int dim) {
  std::vector<char> result(static_cast<std::size_t>(arena.vertex_count()), 0);
  for (const Edge& edge : arena.edges)
    if (is_increment(edge.cost, dim)) result[static_cast<std::size_t>(edge.dst)] = 1;
  return result;
}

std::vector<char> to_mask(int n, const std::vector<int>& set) {
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  for (int v : set) mask[static_cast<std::size_t>(v)] = 1;
  return mask;
}

std::vector<int> to_sorted_list(const std::vector<char>& mask) {
  std::vector<int> list;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) list.push_back(static_cast<int>(v));
  return list;
}

}  // namespace costly
