#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "shortcut_forge/graph_core.hpp"

namespace sforge {

enum class Family { random_dag, random_digraph, path, layered, grid_dag, weighted_random };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view text);

struct GenSpec {
  Family family = Family::random_dag;
  std::size_t n = 0;
  /// Edge probability of every candidate pair. Ignored by path and grid_dag.
  double p = 0.0;
  /// Weight bound, weighted_random only.
  Weight max_weight = 1;
  std::uint64_t seed = 0;
};

using GeneratedGraph = std::variant<Digraph, WeightedDigraph>;

/// Deterministic under spec.seed.
///
///  random_dag       each forward pair of a seeded permutation with prob p
///  random_digraph   each ordered pair u != v with prob p
///  path             0 -> 1 -> ... -> n-1
///  layered          layers of ceil(sqrt n) consecutive ids; each pair of
///                   adjacent layers joined with prob p
///  grid_dag         row-major grid of width ceil(sqrt n), edges right and down
///  weighted_random  random_digraph with weights uniform in [1, max_weight]
///
/// Throws std::invalid_argument for p outside [0,1] or max_weight == 0, and
/// std::length_error above the vertex ceiling.
GeneratedGraph generate(const GenSpec& spec);

/// generate() for the unweighted families; throws for weighted_random.
Digraph generate_digraph(const GenSpec& spec);
/// generate() for weighted_random; throws for the other families.
WeightedDigraph generate_weighted(const GenSpec& spec);

/// Edge probability that gives `density` expected edges per vertex for the
/// family (candidate pairs differ between families).
double probability_for_density(Family family, std::size_t n, double density);

/// Attaches weights uniform in [1, max_weight] to every edge of g.
WeightedDigraph with_random_weights(const Digraph& g, Weight max_weight, std::uint64_t seed);

struct Subdivision {
  Digraph graph;
  std::size_t k = 1;
  /// head[i] = u^i_1 and tail[i] = u^i_{k+1}, the first and last vertex of
  /// the path replacing original vertex i.
  std::vector<Vertex> head;
  std::vector<Vertex> tail;

  /// Image of a path of the original graph: the concatenation of the
  /// replacement paths of its vertices.
  std::vector<Vertex> map_path(std::span<const Vertex> path) const;
};

/// G_k: every vertex v_i becomes the path u^i_1 -> ... -> u^i_{k+1} (ids
/// i(k+1) .. i(k+1)+k) and every edge (v_i, v_j) becomes (u^i_{k+1}, u^j_1).
/// Throws std::invalid_argument when k == 0.
Subdivision subdivide(const Digraph& g, std::size_t k);

}  // namespace sforge
