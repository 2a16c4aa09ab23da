#include "shortcut_forge/chain_decomp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sforge {

std::size_t antichain_budget(std::size_t n, std::size_t ell) {
  return (2 * n + ell - 1) / ell;
}

namespace {

constexpr Vertex kNone = static_cast<Vertex>(-1);

/// Longest chain ending at each live vertex, over the live induced subgraph.
struct LongestChains {
  std::vector<std::size_t> length;  // 0 for removed vertices
  std::vector<Vertex> predecessor;
};

LongestChains longest_chains(const Digraph& dag, const std::vector<Vertex>& topo,
                             const std::vector<char>& live) {
  const std::size_t n = dag.vertex_count();
  LongestChains lc{std::vector<std::size_t>(n, 0), std::vector<Vertex>(n, kNone)};
  for (Vertex v : topo) {
    if (!live[v]) continue;
    std::size_t best = 0;
    Vertex best_pred = kNone;
    for (Vertex u : dag.in(v)) {  // ascending ids: strict > keeps the smallest
      if (live[u] && lc.length[u] > best) {
        best = lc.length[u];
        best_pred = u;
      }
    }
    lc.length[v] = best + 1;
    lc.predecessor[v] = best_pred;
  }
  return lc;
}

}  // namespace

ChainDecomposition decompose(const Digraph& dag, std::size_t ell) {
  const std::size_t n = dag.vertex_count();
  if (ell < 1 || ell > std::max<std::size_t>(n, 1)) {
    throw std::invalid_argument("decompose: chain budget " + std::to_string(ell) +
                                " outside [1, " + std::to_string(n) + "]");
  }
  const auto topo = topological_order(dag);
  if (!topo) throw std::invalid_argument("decompose: input graph has a cycle");

  ChainDecomposition result;
  result.target_ell = ell;
  const std::size_t threshold = antichain_budget(n, ell);
  std::vector<char> live(n, 1);

  while (result.chains.size() < ell) {
    const LongestChains lc = longest_chains(dag, *topo, live);
    Vertex end = kNone;
    for (Vertex v = 0; v < n; ++v)
      if (live[v] && (end == kNone || lc.length[v] > lc.length[end])) end = v;
    if (end == kNone || lc.length[end] < threshold) break;

    std::vector<Vertex> chain;
    for (Vertex v = end; v != kNone; v = lc.predecessor[v]) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    for (Vertex v : chain) live[v] = 0;
    result.chains.push_back(std::move(chain));
  }

  const LongestChains levels = longest_chains(dag, *topo, live);
  for (Vertex v = 0; v < n; ++v) {
    if (!live[v]) continue;
    const std::size_t level = levels.length[v] - 1;
    if (result.antichains.size() <= level) result.antichains.resize(level + 1);
    result.antichains[level].push_back(v);
  }
  return result;
}

}  // namespace sforge
