#include "shortcut_forge/line_shortcut.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace sforge {

PathShortcut shortcut_path(std::span<const Vertex> path) {
  if (path.empty()) throw std::invalid_argument("shortcut_path: empty path");
  {
    std::vector<Vertex> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw std::invalid_argument("shortcut_path: vertex " + std::to_string(*dup) +
                                  " appears twice");
    }
  }

  PathShortcut result;
  result.path.assign(path.begin(), path.end());

  // Explicit stack of inclusive [lo, hi] segments.
  std::vector<std::pair<std::size_t, std::size_t>> segments{{0, path.size() - 1}};
  while (!segments.empty()) {
    const auto [lo, hi] = segments.back();
    segments.pop_back();
    if (hi <= lo) continue;
    const std::size_t mid = lo + (hi - lo) / 2;
    for (std::size_t i = lo; i < mid; ++i)
      if (i + 1 != mid) result.edges.push_back({path[i], path[mid]});
    for (std::size_t i = mid + 1; i <= hi; ++i)
      if (i != mid + 1) result.edges.push_back({path[mid], path[i]});
    if (mid > lo) segments.emplace_back(lo, mid - 1);
    segments.emplace_back(mid + 1, hi);
  }

  std::sort(result.edges.begin(), result.edges.end());
  result.edges.erase(std::unique(result.edges.begin(), result.edges.end()),
                     result.edges.end());
  return result;
}

}  // namespace sforge
