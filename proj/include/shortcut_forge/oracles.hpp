#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shortcut_forge/chain_decomp.hpp"
#include "shortcut_forge/graph_core.hpp"
#include "shortcut_forge/hopset_algos.hpp"

namespace sforge {

// Brute-force ground truth. Nothing here calls into the construction modules
// or the graph_core algorithms: only the graph types are shared, and every
// check runs on plain BFS, Bellman-Ford or exhaustive enumeration.

enum class CheckStatus { pass, fail, skipped };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  /// Violating pair, path or certificate. Always set for failures.
  std::string witness;
};

struct VerificationReport {
  std::string instance;
  std::vector<Check> checks;
  std::optional<std::size_t> achieved_diameter;
  std::optional<double> achieved_stretch;
  std::optional<std::size_t> achieved_hops;

  bool passed() const;
  const Check* find(std::string_view name) const;
  void record(std::string name, bool ok, std::string witness = {});
  void skip(std::string name, std::string reason);

  std::string to_json() const;
};

/// H must be a subset of the closure of g, must not change the closure, and
/// g U H must have hop diameter at most `diameter` over reachable pairs u != v.
VerificationReport verify_shortcut(const Digraph& g, std::span<const Edge> h,
                                   std::size_t diameter);

/// Both sides of dist_G <= dist^(beta)_{G U H} <= (1+eps) dist_G, plus exact
/// H weights. Also measures the smallest hop budget at which the upper side
/// holds for every pair (achieved_hops).
VerificationReport verify_hopset(const WeightedDigraph& g, std::span<const WeightedEdge> h,
                                 std::size_t beta, Rational eps);

/// Largest graph on which verify_nice enumerates paths for N5/N6.
inline constexpr std::size_t kNiceEnumerationLimit = 60;

/// N1-N4 directly; N5 and N6 by enumerating floor(beta/12)-hop shortest paths
/// of each residual closure (skipped above kNiceEnumerationLimit vertices).
VerificationReport verify_nice(const WeightedDigraph& g, const NicePathCollection& q);

struct LbThresholds {
  std::size_t max_degree = 0;
  /// Required edge count of every path, when set.
  std::optional<std::size_t> path_length;
};

/// Structural properties of a lower-bound instance: (1) degree bounds,
/// (2) path validity and length, (3) each path is the unique path between its
/// endpoints, (4) pairwise intersections of at most one vertex, (5) per-vertex
/// path load at most max(in, out) degree, (6) acyclicity.
VerificationReport check_lb_properties(const Digraph& g,
                                       std::span<const std::vector<Vertex>> paths,
                                       const LbThresholds& thresholds);

/// Disjoint exact cover, chain validity, antichain independence against the
/// edges of `dag`, at most ell chains and at most ceil(2n/ell) antichains.
VerificationReport check_decomposition(const Digraph& dag, const ChainDecomposition& d,
                                       std::size_t ell);

/// Cover, disjointness, contiguity, per-piece length <= eps * len, and at most
/// ceil(2/eps) + 1 pieces per path.
VerificationReport check_subpath_partition(const NicePathCollection& q,
                                           const SubpathPartition& partition);

/// For every piece vertex u != v reachable from v, some ladder edge (v, z) has
/// z no later than u and dist(v,z) <= (1+eps) dist(v,u). Also weight exactness
/// and the ceil(log_{1+eps}(nW)) + 1 size bound.
VerificationReport check_ladder(const WeightedDigraph& g, Vertex v,
                                std::span<const Vertex> piece,
                                std::span<const WeightedEdge> ladder, Rational eps);

namespace oracle {

/// reach[u][v] by DFS from every source (reflexive).
std::vector<std::vector<char>> reachability(const Digraph& g);

/// BFS hop distances from every source; kInfinity when unreachable.
std::vector<std::vector<Weight>> bfs_all_pairs(std::size_t n, std::span<const Edge> edges);

/// Bellman-Ford from every source, run to the fixpoint.
std::vector<std::vector<Weight>> bellman_ford_all_pairs(std::size_t n,
                                                        std::span<const WeightedEdge> edges);

/// Minimum length over paths with at most `hops` edges, by enumerating every
/// simple path of at most `hops` edges. Exponential; tests only.
std::vector<std::vector<Weight>> enumerate_hop_bounded(const WeightedDigraph& g,
                                                       std::size_t hops);

/// Maximum finite BFS distance over pairs u != v.
std::size_t diameter(std::size_t n, std::span<const Edge> edges);

}  // namespace oracle

}  // namespace sforge
