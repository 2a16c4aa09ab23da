#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "shortcut_forge/bit_matrix.hpp"

namespace sforge {

using Vertex = std::uint32_t;

/// Edge weights and path lengths. Unweighted distances are hop counts.
using Weight = std::uint64_t;

/// Distance sentinel for unreachable pairs. Strictly larger than any n*W the
/// vertex ceiling admits; all additions saturate at this value.
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

/// Desk-scale ceiling on vertex count (bit matrices are n^2/8 bytes).
inline constexpr std::size_t kMaxVertices = 4096;

inline constexpr Weight saturating_add(Weight a, Weight b) noexcept {
  return (a >= kInfinity - b) ? kInfinity : a + b;
}

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct WeightedEdge {
  Vertex from = 0;
  Vertex to = 0;
  Weight weight = 1;
  friend auto operator<=>(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Throws std::length_error when n exceeds kMaxVertices.
void check_vertex_ceiling(std::size_t n);

/// Immutable unweighted digraph with sorted, duplicate-free edges and CSR
/// adjacency in both directions.
class Digraph {
 public:
  Digraph() = default;

  /// Duplicate edges are merged. Self-loops and out-of-range endpoints throw
  /// std::invalid_argument.
  Digraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Out-neighbours of v in increasing id order.
  std::span<const Vertex> out(Vertex v) const noexcept;
  /// In-neighbours of v in increasing id order.
  std::span<const Vertex> in(Vertex v) const noexcept;

  bool has_edge(Vertex u, Vertex v) const noexcept;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Vertex> in_sources_;
};

/// Immutable digraph with integer weights in [1, W].
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  /// For duplicate (u,v) pairs the smallest weight is kept. max_weight == 0
  /// means "use the largest edge weight". Weights outside [1, max_weight],
  /// self-loops and out-of-range endpoints throw std::invalid_argument.
  WeightedDigraph(std::size_t n, std::vector<WeightedEdge> edges,
                  Weight max_weight = 0);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  Weight max_weight() const noexcept { return max_weight_; }
  std::span<const WeightedEdge> edges() const noexcept { return edges_; }

  /// Outgoing edges of v, sorted by target.
  std::span<const WeightedEdge> out(Vertex v) const noexcept;

  /// The same graph with weights forgotten.
  Digraph topology() const;

 private:
  std::size_t n_ = 0;
  Weight max_weight_ = 1;
  std::vector<WeightedEdge> edges_;
  std::vector<std::size_t> out_offsets_;
};

/// bits(u,v) is set iff v is reachable from u. Every vertex reaches itself.
using ReachabilityMatrix = BitMatrix;

/// Dense n x n matrix of path lengths; kInfinity marks unreachable pairs.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n, Weight fill = kInfinity)
      : n_(n), dist_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  Weight at(Vertex u, Vertex v) const noexcept { return dist_[u * n_ + v]; }
  Weight& at(Vertex u, Vertex v) noexcept { return dist_[u * n_ + v]; }
  std::span<const Weight> row(Vertex u) const noexcept {
    return {dist_.data() + u * n_, n_};
  }
  std::span<Weight> row(Vertex u) noexcept { return {dist_.data() + u * n_, n_}; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Weight> dist_;
};

/// Strongly connected components contracted to a DAG. Component ids follow a
/// topological order of the DAG.
struct Condensation {
  Digraph dag;
  std::vector<Vertex> component_of;
  /// Members of each component in increasing id order; members[c][0] is the
  /// component representative.
  std::vector<std::vector<Vertex>> members;

  Vertex representative(Vertex component) const { return members[component].front(); }
};

/// Kahn topological order, smallest ready vertex first. Empty optional when
/// the graph has a cycle.
std::optional<std::vector<Vertex>> topological_order(const Digraph& g);

bool is_acyclic(const Digraph& g);

/// Reflexive transitive closure by repeated squaring of (A | I).
ReachabilityMatrix transitive_closure(const Digraph& g);

/// (A | I)^r: bit (u,v) set iff dist(u,v) <= r. Uses binary exponentiation,
/// so ceil(log2 r) squarings.
ReachabilityMatrix bounded_reachability(const Digraph& g, std::size_t r);

/// Graph with an edge (u,v) for every closure pair u != v.
Digraph closure_graph(const ReachabilityMatrix& closure);

/// Tarjan SCC condensation.
Condensation condense(const Digraph& g);

/// Lifts a shortcut set of the condensation back to g.
///
/// Every h_plus edge (X,Y) becomes (rep X, rep Y); every non-trivial component
/// additionally gets an in-star and an out-star at its representative. If
/// dag U h_plus has diameter L then g U H has diameter at most 3L + 2, and
/// |H| <= |h_plus| + 2 (n - #components).
///
/// Throws std::invalid_argument if an h_plus edge is not a closure pair of
/// c.dag or is a self-loop.
std::vector<Edge> lift_shortcuts(const Digraph& g, const Condensation& c,
                                 std::span<const Edge> h_plus);

/// Exact weighted all-pairs shortest paths (Dijkstra from every source).
DistanceMatrix apsp(const WeightedDigraph& g);

/// Hop-count all-pairs distances (BFS from every source).
DistanceMatrix hop_distances(const Digraph& g);

/// dist^(beta): minimum length over paths with at most beta edges, by beta
/// rounds of edge relaxation from every source.
DistanceMatrix hop_limited_dist(const WeightedDigraph& g, std::size_t beta);

/// Edge (u, v, dist(u,v)) for every reachable pair u != v.
WeightedDigraph weighted_closure(const WeightedDigraph& g);

/// Same, from an already computed distance matrix.
WeightedDigraph weighted_closure(const DistanceMatrix& dist);

}  // namespace sforge
