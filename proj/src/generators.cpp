#include "shortcut_forge/generators.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "shortcut_forge/rng.hpp"

namespace sforge {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames{{
    {Family::random_dag, "random_dag"},
    {Family::random_digraph, "random_digraph"},
    {Family::path, "path"},
    {Family::layered, "layered"},
    {Family::grid_dag, "grid_dag"},
    {Family::weighted_random, "weighted_random"},
}};

std::size_t side_length(std::size_t n) {
  std::size_t w = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (w * w < n) ++w;
  while (w > 1 && (w - 1) * (w - 1) >= n) --w;
  return std::max<std::size_t>(w, 1);
}

std::vector<Edge> random_dag_edges(std::size_t n, double p, const Rng& rng) {
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  Rng perm = rng.fork("gen/permutation");
  perm.shuffle(order);
  Rng draws = rng.fork("gen/edges");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (draws.bernoulli(p)) edges.push_back({order[i], order[j]});
  return edges;
}

std::vector<Edge> random_digraph_edges(std::size_t n, double p, const Rng& rng) {
  Rng draws = rng.fork("gen/edges");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && draws.bernoulli(p)) edges.push_back({u, v});
  return edges;
}

std::vector<Edge> layered_edges(std::size_t n, double p, const Rng& rng) {
  const std::size_t width = side_length(n);
  Rng draws = rng.fork("gen/edges");
  std::vector<Edge> edges;
  for (std::size_t start = 0; start + width < n; start += width) {
    const std::size_t next_end = std::min(n, start + 2 * width);
    for (std::size_t u = start; u < start + width; ++u)
      for (std::size_t v = start + width; v < next_end; ++v)
        if (draws.bernoulli(p)) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return edges;
}

std::vector<Edge> grid_edges(std::size_t n) {
  const std::size_t width = side_length(n);
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    if ((v + 1) % width != 0 && v + 1 < n)
      edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + 1)});
    if (v + width < n) edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + width)});
  }
  return edges;
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [family, name] : kFamilyNames)
    if (family == f) return name;
  return "unknown";
}

std::optional<Family> parse_family(std::string_view text) {
  for (const auto& [family, name] : kFamilyNames)
    if (name == text) return family;
  return std::nullopt;
}

GeneratedGraph generate(const GenSpec& spec) {
  check_vertex_ceiling(spec.n);
  if (!(spec.p >= 0.0 && spec.p <= 1.0))
    throw std::invalid_argument("generate: edge probability must lie in [0, 1]");
  const Rng rng(spec.seed);
  const std::size_t n = spec.n;
  switch (spec.family) {
    case Family::random_dag:
      return Digraph(n, random_dag_edges(n, spec.p, rng));
    case Family::random_digraph:
      return Digraph(n, random_digraph_edges(n, spec.p, rng));
    case Family::path: {
      std::vector<Edge> edges;
      for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      return Digraph(n, std::move(edges));
    }
    case Family::layered:
      return Digraph(n, layered_edges(n, spec.p, rng));
    case Family::grid_dag:
      return Digraph(n, grid_edges(n));
    case Family::weighted_random: {
      if (spec.max_weight == 0) throw std::invalid_argument("generate: W must be >= 1");
      const Digraph topology(n, random_digraph_edges(n, spec.p, rng));
      return with_random_weights(topology, spec.max_weight, rng.fork("gen/weights").seed());
    }
  }
  throw std::invalid_argument("generate: unknown family");
}

Digraph generate_digraph(const GenSpec& spec) {
  if (spec.family == Family::weighted_random)
    throw std::invalid_argument("generate_digraph: weighted_random is a weighted family");
  return std::get<Digraph>(generate(spec));
}

WeightedDigraph generate_weighted(const GenSpec& spec) {
  if (spec.family != Family::weighted_random)
    throw std::invalid_argument("generate_weighted: only weighted_random is weighted");
  return std::get<WeightedDigraph>(generate(spec));
}

double probability_for_density(Family family, std::size_t n, double density) {
  if (density < 0.0) throw std::invalid_argument("density must be non-negative");
  if (n < 2) return 0.0;
  const double dn = static_cast<double>(n);
  double pairs = 0.0;
  switch (family) {
    case Family::random_dag:
      pairs = dn * (dn - 1.0) / 2.0;
      break;
    case Family::random_digraph:
    case Family::weighted_random:
      pairs = dn * (dn - 1.0);
      break;
    case Family::layered: {
      const std::size_t width = side_length(n);
      for (std::size_t start = 0; start + width < n; start += width)
        pairs += static_cast<double>(width * (std::min(n, start + 2 * width) - start - width));
      break;
    }
    case Family::path:
    case Family::grid_dag:
      return 0.0;
  }
  return pairs > 0.0 ? std::min(1.0, density * dn / pairs) : 0.0;
}

WeightedDigraph with_random_weights(const Digraph& g, Weight max_weight, std::uint64_t seed) {
  if (max_weight == 0) throw std::invalid_argument("with_random_weights: W must be >= 1");
  Rng rng(seed);
  std::vector<WeightedEdge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({e.from, e.to, rng.between(1, max_weight)});
  return WeightedDigraph(g.vertex_count(), std::move(edges), max_weight);
}

std::vector<Vertex> Subdivision::map_path(std::span<const Vertex> path) const {
  std::vector<Vertex> out;
  out.reserve(path.size() * (k + 1));
  for (Vertex v : path)
    for (Vertex x = head.at(v); x <= tail.at(v); ++x) out.push_back(x);
  return out;
}

Subdivision subdivide(const Digraph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("subdivide: k must be >= 1");
  const std::size_t n = g.vertex_count();
  check_vertex_ceiling(n * (k + 1));
  Subdivision out;
  out.k = k;
  std::vector<Edge> edges;
  edges.reserve(n * k + g.edge_count());
  for (Vertex i = 0; i < n; ++i) {
    const auto base = static_cast<Vertex>(i * (k + 1));
    out.head.push_back(base);
    out.tail.push_back(static_cast<Vertex>(base + k));
    for (Vertex j = 0; j < k; ++j) edges.push_back({base + j, base + j + 1});
  }
  for (const Edge& e : g.edges()) edges.push_back({out.tail[e.from], out.head[e.to]});
  out.graph = Digraph(n * (k + 1), std::move(edges));
  return out;
}

}  // namespace sforge
