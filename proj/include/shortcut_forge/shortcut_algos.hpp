#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "shortcut_forge/graph_core.hpp"

namespace sforge {

enum class Provenance {
  path_shortcut,  // chain edges and their line shortcuts
  sampled_pair,   // first incoming edges from sampled vertices to sampled chains
  baseline,       // folklore sample closure
  lifted,         // condensation lifting: representative edges and stars
  reduction,      // transitive-reduction edges of a TC-spanner
};

std::string_view to_string(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view text);

struct TaggedEdge {
  Edge edge;
  Provenance provenance;
};

struct ShortcutParams {
  std::size_t diameter = 3;
  double sampling_constant = 3.0;
  std::uint64_t seed = 0;
};

/// Bookkeeping from the construction side. Never used as evidence of quality;
/// achieved diameters come from the oracles.
struct ShortcutStats {
  std::size_t sampled_vertices = 0;
  std::size_t chains = 0;
  std::size_t sampled_chains = 0;
  std::size_t antichains = 0;
  std::size_t reduced_vertices = 0;  // |V'| of the large-D reduction
  std::size_t inner_diameter = 0;    // D' of the large-D recursion
  std::size_t hop_radius = 0;        // r of the large-D reduction
};

/// Edge set H added to a graph, sorted by (from, to), no duplicates. When the
/// same pair is produced twice the first provenance is kept.
class ShortcutSet {
 public:
  ShortcutSet() = default;
  ShortcutSet(std::vector<TaggedEdge> tagged, ShortcutParams params, ShortcutStats stats = {});

  std::span<const TaggedEdge> tagged() const noexcept { return tagged_; }
  std::vector<Edge> edges() const;
  std::size_t size() const noexcept { return tagged_.size(); }
  bool empty() const noexcept { return tagged_.empty(); }
  std::size_t count(Provenance p) const;

  const ShortcutParams& params() const noexcept { return params_; }
  const ShortcutStats& stats() const noexcept { return stats_; }

 private:
  std::vector<TaggedEdge> tagged_;
  ShortcutParams params_;
  ShortcutStats stats_;
};

/// ceil(n^(1/3)) and floor(n^(1/3)), exact in integers.
std::size_t cube_root_ceil(std::size_t n);
std::size_t cube_root_floor(std::size_t n);

/// min(1, c * ln(n) / denominator), 0 when n < 2.
double sampling_probability(double c, std::size_t n, double denominator);

/// Folklore baseline: keep each vertex with probability min(1, c ln n / D) and
/// add every closure pair among the kept vertices.
ShortcutSet folklore(const Digraph& g, const ShortcutParams& params);

struct FirstIncomingEdge {
  Vertex source = 0;
  std::size_t chain = 0;
  Vertex target = 0;
};

/// First chain vertex u != v that v reaches, by binary search: reachability
/// from v is suffix-closed along a chain. `chain` must be a directed path of
/// the closure, which must come from a DAG.
std::optional<FirstIncomingEdge> first_incoming_edge(const ReachabilityMatrix& closure, Vertex v,
                                                     std::span<const Vertex> chain,
                                                     std::size_t chain_id = 0);

/// Small-diameter construction for a DAG.
///
///  1. (l, 2n/l)-decomposition of the closure with l = min(n, ceil(16n/D)).
///  2. Every chain contributes its own edges plus its line shortcuts.
///  3. Vertices and chains are each kept with p = min(1, c ln n / D).
///  4. Every kept vertex gets its first incoming edge into every kept chain.
///
/// Throws std::invalid_argument for cyclic input or D outside [3, ceil(n^(1/3))].
ShortcutSet shortcut_small_diam(const Digraph& dag, const ShortcutParams& params);

/// Large-diameter construction for a DAG.
///
///  1. Keep vertices with p = min(1, c sqrt(n) ln n / D^(3/2)).
///  2. G' joins kept u, v whenever dist(u,v) <= r = ceil(D^(3/2) / sqrt(n)),
///     found as (A | I)^r.
///  3. Run the small-diameter construction on G' with
///     D' = max(3, floor(n'^(1/3) / ln n)); its edges map back to closure
///     pairs of the input.
///
/// The diameter guarantee is O(D), not D; callers measure the constant.
/// Throws std::invalid_argument for cyclic input or D < floor(n^(1/3)).
ShortcutSet shortcut_large_d(const Digraph& dag, const ShortcutParams& params);

enum class ShortcutMode { automatic, small, large };

/// Any digraph: condenses, runs the small or large construction on the
/// condensation G+ and lifts the result. `automatic` picks small exactly when
/// D <= ceil(n+^(1/3)); forcing a mode keeps that mode's D range.
/// Throws std::invalid_argument when D < 3 or D is outside the forced range.
ShortcutSet build_shortcuts(const Digraph& g, const ShortcutParams& params,
                            ShortcutMode mode = ShortcutMode::automatic);

/// Minimum-size graph with the same closure: a cycle through each strong
/// component (in id order) plus, for every condensation edge without a
/// two-step detour, one edge between the component representatives.
std::vector<Edge> transitive_reduction(const Digraph& g);

struct TcSpanner {
  std::vector<Edge> reduction;
  ShortcutSet shortcuts;

  /// reduction U shortcuts, reduction edges tagged as such.
  std::vector<TaggedEdge> tagged() const;
};

/// k-TC-spanner: transitive reduction plus shortcuts of the reduction.
///
/// For acyclic input the shortcuts target diameter k. When strong components
/// are present the lifted stars cost two hops, so the target becomes
/// max(3, k - 2), and the hop bound holds for k >= 5.
/// Throws std::invalid_argument when k < 3.
TcSpanner tc_spanner(const Digraph& g, std::size_t k, double sampling_constant,
                     std::uint64_t seed);

}  // namespace sforge
