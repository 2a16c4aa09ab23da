#pragma once

#include <cstddef>
#include <vector>

#include "shortcut_forge/graph_core.hpp"

namespace sforge {

/// Cover of a DAG's vertices by vertex-disjoint chains (directed paths of the
/// input graph) and antichains (sets with no input edge among members).
struct ChainDecomposition {
  std::vector<std::vector<Vertex>> chains;
  std::vector<std::vector<Vertex>> antichains;
  std::size_t target_ell = 0;
};

/// Smallest antichain budget allowed for a chain budget ell: ceil(2n / ell).
std::size_t antichain_budget(std::size_t n, std::size_t ell);

/// (ell, 2n/ell)-decomposition of a DAG.
///
/// Repeatedly removes a longest chain of the residual graph while fewer than
/// ell chains have been taken and the residual longest chain has at least
/// ceil(2n/ell) vertices. Each removed chain has at least that many vertices,
/// so at most ell/2 chains are ever removed. The residual is then split into
/// Mirsky levels (level = vertex count of the longest residual chain ending at
/// the vertex), giving fewer than ceil(2n/ell) antichains.
///
/// Ties between equally long chains go to the smallest end vertex; within a
/// chain, to the smallest predecessor.
///
/// Throws std::invalid_argument if dag has a cycle or ell is outside [1, n].
ChainDecomposition decompose(const Digraph& dag, std::size_t ell);

}  // namespace sforge
