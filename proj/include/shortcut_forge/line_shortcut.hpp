#pragma once

#include <span>
#include <vector>

#include "shortcut_forge/graph_core.hpp"

namespace sforge {

struct PathShortcut {
  std::vector<Vertex> path;
  /// Sorted; every edge goes forward along the path and is not a path edge.
  std::vector<Edge> edges;
};

/// Shortcuts a directed path to hop diameter 2.
///
/// Recursive midpoint construction: every vertex of the current segment is
/// joined to and from the segment's middle vertex (index (lo+hi)/2), then both
/// halves recurse. Edges between consecutive path vertices are omitted since
/// the path already has them. Produces at most |P| * ceil(log2 |P|) edges.
///
/// Throws std::invalid_argument on an empty path or repeated vertices.
PathShortcut shortcut_path(std::span<const Vertex> path);

}  // namespace sforge
