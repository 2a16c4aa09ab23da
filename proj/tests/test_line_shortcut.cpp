#include <doctest.h>

#include <stdexcept>

#include <numeric>

#include "shortcut_forge/line_shortcut.hpp"
#include "shortcut_forge/oracles.hpp"
#include "shortcut_forge/rng.hpp"

using namespace sforge;

namespace {

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

// Forward diameter of path U edges, plus the checks every output must meet.
std::size_t check_shortcut(const std::vector<Vertex>& path) {
  const PathShortcut ps = shortcut_path(path);
  std::vector<std::size_t> pos(path.size() == 0 ? 0 : *std::max_element(path.begin(), path.end()) + 1);
  for (std::size_t i = 0; i < path.size(); ++i) pos[path[i]] = i;
  for (const Edge& e : ps.edges) {
    CHECK(pos[e.from] + 1 < pos[e.to]);  // forward and not a path edge
  }
  CHECK(std::is_sorted(ps.edges.begin(), ps.edges.end()));
  CHECK(std::adjacent_find(ps.edges.begin(), ps.edges.end()) == ps.edges.end());
  CHECK(ps.edges.size() <= path.size() * ceil_log2(path.size()));
  std::vector<Edge> all = ps.edges;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) all.push_back({path[i], path[i + 1]});
  return oracle::diameter(pos.size(), all);
}

}  // namespace

TEST_SUITE("line_shortcut") {
  TEST_CASE("trivial paths need no shortcuts") {
    CHECK(shortcut_path(std::vector<Vertex>{4}).edges.empty());
    CHECK(shortcut_path(std::vector<Vertex>{4, 9}).edges.empty());
  }

  TEST_CASE("33 vertices: diameter 2 within 33 * 6 edges") {
    std::vector<Vertex> path(33);
    std::iota(path.begin(), path.end(), 0);
    CHECK(check_shortcut(path) <= 2);
    CHECK(shortcut_path(path).edges.size() <= 33 * 6);
  }

  TEST_CASE("midpoint is floor((lo+hi)/2)") {
    // 0..4: the middle vertex 2 is joined with 0 and 4 (1 and 3 are path
    // neighbours); the halves [0,1] and [3,4] need nothing more.
    const PathShortcut ps = shortcut_path(std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(ps.edges == std::vector<Edge>{{0, 2}, {2, 4}});
  }

  TEST_CASE("relabelled paths keep the order of the sequence") {
    const std::vector<Vertex> path{7, 3, 9, 0, 5, 2};
    CHECK(check_shortcut(path) <= 2);
  }

  TEST_CASE("random lengths up to 1024") {
    Rng rng(11);
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t len = rng.between(1, 1024);
      std::vector<Vertex> path(len);
      std::iota(path.begin(), path.end(), 0);
      CHECK(check_shortcut(path) <= 2);
    }
  }

  TEST_CASE("invalid paths") {
    CHECK_THROWS_AS(shortcut_path(std::vector<Vertex>{}), std::invalid_argument);
    CHECK_THROWS_AS(shortcut_path(std::vector<Vertex>{1, 2, 1}), std::invalid_argument);
  }
}
