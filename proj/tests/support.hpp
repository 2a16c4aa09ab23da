#pragma once

#include <vector>

#include "shortcut_forge/graph_core.hpp"

namespace sforge::test {

inline Digraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Digraph(n, std::move(edges));
}

inline WeightedDigraph unit_path(std::size_t n) {
  std::vector<WeightedEdge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
  return WeightedDigraph(n, std::move(edges), 1);
}

inline std::vector<Edge> united(const Digraph& g, const std::vector<Edge>& h) {
  std::vector<Edge> all(g.edges().begin(), g.edges().end());
  all.insert(all.end(), h.begin(), h.end());
  return all;
}

inline std::vector<WeightedEdge> united(const WeightedDigraph& g, const std::vector<WeightedEdge>& h) {
  std::vector<WeightedEdge> all(g.edges().begin(), g.edges().end());
  all.insert(all.end(), h.begin(), h.end());
  return all;
}

}  // namespace sforge::test
