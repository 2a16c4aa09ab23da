#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shortcut_forge/graph_core.hpp"

namespace sforge {

/// Exact positive rational, used for epsilon so that (1+eps) comparisons are
/// done by integer cross-multiplication.
struct Rational {
  std::uint64_t num = 1;
  std::uint64_t den = 4;

  /// Parses "p/q" or a plain integer. Throws std::invalid_argument.
  static Rational parse(std::string_view text);
  std::string str() const;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  Rational halved() const { return {num, den * 2}; }

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// a <= (1+eps) * b, exactly.
bool within_stretch(Weight a, Weight b, Rational eps);
/// (1+eps) * a < b, exactly.
bool stretched_below(Weight a, Weight b, Rational eps);

/// A shortest path of the weighted closure with exactly floor(beta/12) hops.
struct NicePath {
  std::vector<Vertex> vertices;
  /// hop_lengths[i] = dist(vertices[i], vertices[i+1]).
  std::vector<Weight> hop_lengths;
  Weight length = 0;
};

struct NicePathCollection {
  std::vector<NicePath> paths;
  std::size_t beta = 12;

  std::size_t hops() const noexcept { return beta / 12; }
};

/// Greedy nice path collection on the weighted closure.
///
/// With h = floor(beta/12): on the residual closure (closure edges among
/// vertices not yet used, weighted by the original distances) compute
/// D_h(i,j) = minimum length over walks of exactly h closure edges, by min-plus
/// powering with back-pointers. A pair is a candidate when D_h(i,j) equals
/// dist(i,j). Take the candidate with smallest dist (ties: smallest (i,j)),
/// rebuild its path, remove its vertices, repeat until no candidate is left.
///
/// Throws std::invalid_argument when beta < 12.
NicePathCollection nice_collection(const WeightedDigraph& g, std::size_t beta);

/// Same, from a precomputed all-pairs distance matrix of the graph.
NicePathCollection nice_collection(const DistanceMatrix& dist, std::size_t beta);

struct Subpath {
  std::size_t source_path = 0;
  std::vector<Vertex> vertices;
  Weight length = 0;
};

struct SubpathPartition {
  /// pieces[i] partitions the vertices of nice path i, in path order.
  std::vector<std::vector<Subpath>> pieces;
  Rational eps;
};

/// Greedy prefix cutting: each piece is the longest prefix of what remains
/// whose length is at most eps * len(path); the edge after each cut is
/// dropped. Throws std::invalid_argument unless 0 < eps < 1.
SubpathPartition partition_subpaths(const NicePathCollection& q, Rational eps);

/// E(v,P): the first vertex u != v of `piece` that v reaches, then repeatedly
/// the first later vertex whose distance from v is below the last chosen
/// distance by more than a (1+eps) factor. Empty when v reaches no vertex.
std::vector<WeightedEdge> geometric_ladder(const DistanceMatrix& dist, Vertex v,
                                           std::span<const Vertex> piece, Rational eps);

/// ceil(log_{1+eps}(n W)) + 1.
std::size_t ladder_size_bound(std::size_t n, Weight max_weight, Rational eps);

enum class HopsetProvenance { induced_closure, geometric_ladder, recursive };

std::string_view to_string(HopsetProvenance p);
std::optional<HopsetProvenance> parse_hopset_provenance(std::string_view text);

struct TaggedWeightedEdge {
  WeightedEdge edge;
  HopsetProvenance provenance;
};

struct HopsetParams {
  std::size_t beta = 12;
  Rational eps{1, 4};
  double sampling_constant = 3.0;
  std::uint64_t seed = 0;
};

struct HopsetStats {
  std::size_t nice_paths = 0;
  std::size_t pieces = 0;
  std::size_t sampled_vertices = 0;
  std::size_t sampled_pieces = 0;
  std::size_t reduced_vertices = 0;  // n' of the large-hop reduction
  std::size_t inner_beta = 0;        // beta' of the large-hop recursion
  std::size_t hop_radius = 0;        // r of the large-hop reduction
};

/// Weighted edge set sorted by (from, to); every weight is the exact distance
/// of its endpoints in the input graph.
class HopsetEdges {
 public:
  HopsetEdges() = default;
  HopsetEdges(std::vector<TaggedWeightedEdge> tagged, HopsetParams params, HopsetStats stats = {});

  std::span<const TaggedWeightedEdge> tagged() const noexcept { return tagged_; }
  std::vector<WeightedEdge> edges() const;
  std::size_t size() const noexcept { return tagged_.size(); }
  bool empty() const noexcept { return tagged_.empty(); }
  std::size_t count(HopsetProvenance p) const;

  const HopsetParams& params() const noexcept { return params_; }
  const HopsetStats& stats() const noexcept { return stats_; }

 private:
  std::vector<TaggedWeightedEdge> tagged_;
  HopsetParams params_;
  HopsetStats stats_;
};

/// floor(n^(1/4)) and ceil(n^(1/4)).
std::size_t fourth_root_floor(std::size_t n);
std::size_t fourth_root_ceil(std::size_t n);

/// Small-hopbound construction. Runs with eps/2 internally so that the
/// (1 + 2 eps') stretch argument yields 1 + eps.
///
///  1. Nice path collection of the weighted closure.
///  2. All closure edges among the vertices of each nice path.
///  3. Each nice path cut into pieces of length <= (eps/2) * len.
///  4. Vertices and pieces kept with p = min(1, c ln n / beta).
///  5. A geometric ladder from every kept vertex into every kept piece.
///
/// beta <= n^(1/4) is the regime in which the size bound is meaningful; it is
/// not enforced because no desk-scale n has n^(1/4) >= 12.
/// Throws std::invalid_argument for beta < 12 or eps outside (0,1).
HopsetEdges hopset_small_hop(const WeightedDigraph& g, const HopsetParams& params);

/// Large-hopbound construction.
///
///  1. Sample n' = min(n, ceil(c (n/beta)^(4/3) ln n)) vertices.
///  2. G' joins sampled u, v with weight dist(u,v) whenever a shortest u-v
///     path has at most r = ceil(beta^(4/3) / n^(1/3)) hops.
///  3. Small-hopbound construction on G' with
///     beta' = max(12, floor(n'^(1/4) / ln n)) and the same eps.
///
/// Returned edges are re-weighted with distances of the input graph.
/// Throws std::invalid_argument for beta < max(12, floor(n^(1/4))) or eps
/// outside (0,1).
HopsetEdges hopset_large_hop(const WeightedDigraph& g, const HopsetParams& params);

/// Dispatches on beta versus ceil(n^(1/4)).
HopsetEdges build_hopset(const WeightedDigraph& g, const HopsetParams& params);

}  // namespace sforge
