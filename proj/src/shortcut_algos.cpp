#include "shortcut_forge/shortcut_algos.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "shortcut_forge/chain_decomp.hpp"
#include "shortcut_forge/line_shortcut.hpp"
#include "shortcut_forge/rng.hpp"

namespace sforge {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::path_shortcut: return "path_shortcut";
    case Provenance::sampled_pair: return "sampled_pair";
    case Provenance::baseline: return "baseline";
    case Provenance::lifted: return "lifted";
    case Provenance::reduction: return "reduction";
  }
  return "unknown";
}

std::optional<Provenance> parse_provenance(std::string_view text) {
  for (Provenance p : {Provenance::path_shortcut, Provenance::sampled_pair, Provenance::baseline,
                       Provenance::lifted, Provenance::reduction}) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

ShortcutSet::ShortcutSet(std::vector<TaggedEdge> tagged, ShortcutParams params,
                         ShortcutStats stats)
    : tagged_(std::move(tagged)), params_(params), stats_(stats) {
  for (const TaggedEdge& t : tagged_) {
    if (t.edge.from == t.edge.to) throw std::invalid_argument("shortcut set contains a self-loop");
  }
  std::stable_sort(tagged_.begin(), tagged_.end(),
                   [](const TaggedEdge& a, const TaggedEdge& b) { return a.edge < b.edge; });
  tagged_.erase(std::unique(tagged_.begin(), tagged_.end(),
                            [](const TaggedEdge& a, const TaggedEdge& b) {
                              return a.edge == b.edge;
                            }),
                tagged_.end());
}

std::vector<Edge> ShortcutSet::edges() const {
  std::vector<Edge> out;
  out.reserve(tagged_.size());
  for (const TaggedEdge& t : tagged_) out.push_back(t.edge);
  return out;
}

std::size_t ShortcutSet::count(Provenance p) const {
  return static_cast<std::size_t>(std::count_if(
      tagged_.begin(), tagged_.end(), [p](const TaggedEdge& t) { return t.provenance == p; }));
}

std::size_t cube_root_floor(std::size_t n) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::size_t cube_root_ceil(std::size_t n) {
  const std::size_t r = cube_root_floor(n);
  return r * r * r == n ? r : r + 1;
}

double sampling_probability(double c, std::size_t n, double denominator) {
  if (n < 2) return 0.0;
  return std::min(1.0, c * std::log(static_cast<double>(n)) / denominator);
}

ShortcutSet folklore(const Digraph& g, const ShortcutParams& params) {
  if (params.diameter < 1) throw std::invalid_argument("folklore: D must be >= 1");
  const std::size_t n = g.vertex_count();
  Rng rng = Rng(params.seed).fork("folklore/vertices");
  const double p =
      sampling_probability(params.sampling_constant, n, static_cast<double>(params.diameter));
  const std::vector<Vertex> sample = bernoulli_sample(rng, n, p);

  std::vector<TaggedEdge> tagged;
  if (!sample.empty()) {
    const ReachabilityMatrix closure = transitive_closure(g);
    for (Vertex u : sample)
      for (Vertex v : sample)
        if (u != v && closure.test(u, v)) tagged.push_back({{u, v}, Provenance::baseline});
  }
  ShortcutStats stats;
  stats.sampled_vertices = sample.size();
  return ShortcutSet(std::move(tagged), params, stats);
}

std::optional<FirstIncomingEdge> first_incoming_edge(const ReachabilityMatrix& closure, Vertex v,
                                                     std::span<const Vertex> chain,
                                                     std::size_t chain_id) {
  // Smallest index whose vertex v reaches.
  std::size_t lo = 0;
  std::size_t hi = chain.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (closure.test(v, chain[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo < chain.size() && chain[lo] == v) ++lo;  // self-pairs are not edges
  if (lo >= chain.size()) return std::nullopt;
  return FirstIncomingEdge{v, chain_id, chain[lo]};
}

namespace {

struct Construction {
  std::vector<TaggedEdge> tagged;
  ShortcutStats stats;
};

void require_acyclic(const Digraph& g, const char* who) {
  if (!is_acyclic(g)) throw std::invalid_argument(std::string(who) + ": input graph has a cycle");
}

Construction small_diam_core(const Digraph& dag, std::size_t diameter, double c, const Rng& rng) {
  Construction out;
  const std::size_t n = dag.vertex_count();
  if (n == 0) return out;

  const ReachabilityMatrix closure = transitive_closure(dag);
  const std::size_t ell = std::min(n, (16 * n + diameter - 1) / diameter);
  const ChainDecomposition dec = decompose(closure_graph(closure), ell);
  out.stats.chains = dec.chains.size();
  out.stats.antichains = dec.antichains.size();

  for (const auto& chain : dec.chains) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      out.tagged.push_back({{chain[i], chain[i + 1]}, Provenance::path_shortcut});
    for (const Edge& e : shortcut_path(chain).edges)
      out.tagged.push_back({e, Provenance::path_shortcut});
  }

  const double p = sampling_probability(c, n, static_cast<double>(diameter));
  Rng vertex_rng = rng.fork("small_diam/vertices");
  Rng chain_rng = rng.fork("small_diam/chains");
  const std::vector<Vertex> vertices = bernoulli_sample(vertex_rng, n, p);
  const std::vector<Vertex> chains = bernoulli_sample(chain_rng, dec.chains.size(), p);
  out.stats.sampled_vertices = vertices.size();
  out.stats.sampled_chains = chains.size();

  for (Vertex v : vertices) {
    for (Vertex id : chains) {
      if (auto first = first_incoming_edge(closure, v, dec.chains[id], id))
        out.tagged.push_back({{v, first->target}, Provenance::sampled_pair});
    }
  }
  return out;
}

/// ceil(sqrt(D^3 / n)) in integers.
std::size_t hop_radius(std::size_t diameter, std::size_t n) {
  const std::uint64_t cube = static_cast<std::uint64_t>(diameter) * diameter * diameter;
  std::uint64_t r = static_cast<std::uint64_t>(
      std::sqrt(static_cast<double>(cube) / static_cast<double>(n)));
  while (r > 0 && (r - 1) * (r - 1) * n >= cube) --r;
  while (r * r * n < cube) ++r;
  return std::max<std::size_t>(1, static_cast<std::size_t>(r));
}

Construction large_d_core(const Digraph& dag, std::size_t diameter, double c, const Rng& rng) {
  Construction out;
  const std::size_t n = dag.vertex_count();
  if (n < 2) return out;

  const double dn = static_cast<double>(n);
  const double p = std::min(
      1.0, c * std::sqrt(dn) * std::log(dn) / std::pow(static_cast<double>(diameter), 1.5));
  Rng vertex_rng = rng.fork("large_d/vertices");
  const std::vector<Vertex> kept = bernoulli_sample(vertex_rng, n, p);
  const std::size_t r = hop_radius(diameter, n);
  out.stats.sampled_vertices = kept.size();
  out.stats.reduced_vertices = kept.size();
  out.stats.hop_radius = r;
  if (kept.size() < 2) return out;

  const ReachabilityMatrix near = bounded_reachability(dag, r);
  std::vector<Edge> reduced_edges;
  for (Vertex i = 0; i < kept.size(); ++i)
    for (Vertex j = 0; j < kept.size(); ++j)
      if (i != j && near.test(kept[i], kept[j])) reduced_edges.push_back({i, j});
  const Digraph reduced(kept.size(), std::move(reduced_edges));

  const double inner_scale =
      std::cbrt(static_cast<double>(kept.size())) / std::log(dn);
  const std::size_t inner_diameter =
      std::max<std::size_t>(3, static_cast<std::size_t>(std::floor(inner_scale)));
  out.stats.inner_diameter = inner_diameter;

  Construction inner = small_diam_core(reduced, inner_diameter, c, rng.fork("large_d/recursion"));
  out.stats.chains = inner.stats.chains;
  out.stats.sampled_chains = inner.stats.sampled_chains;
  out.stats.antichains = inner.stats.antichains;
  for (const TaggedEdge& t : inner.tagged)
    out.tagged.push_back({{kept[t.edge.from], kept[t.edge.to]}, t.provenance});
  return out;
}

}  // namespace

ShortcutSet shortcut_small_diam(const Digraph& dag, const ShortcutParams& params) {
  require_acyclic(dag, "shortcut_small_diam");
  const std::size_t upper = cube_root_ceil(dag.vertex_count());
  if (params.diameter < 3 || params.diameter > upper) {
    throw std::invalid_argument("shortcut_small_diam: D = " + std::to_string(params.diameter) +
                                " outside [3, " + std::to_string(upper) + "]");
  }
  Construction built =
      small_diam_core(dag, params.diameter, params.sampling_constant, Rng(params.seed));
  return ShortcutSet(std::move(built.tagged), params, built.stats);
}

ShortcutSet shortcut_large_d(const Digraph& dag, const ShortcutParams& params) {
  require_acyclic(dag, "shortcut_large_d");
  const std::size_t lower = cube_root_floor(dag.vertex_count());
  if (params.diameter < std::max<std::size_t>(1, lower)) {
    throw std::invalid_argument("shortcut_large_d: D = " + std::to_string(params.diameter) +
                                " below floor(n^(1/3)) = " + std::to_string(lower));
  }
  Construction built =
      large_d_core(dag, params.diameter, params.sampling_constant, Rng(params.seed));
  return ShortcutSet(std::move(built.tagged), params, built.stats);
}

ShortcutSet build_shortcuts(const Digraph& g, const ShortcutParams& params, ShortcutMode mode) {
  if (params.diameter < 3) throw std::invalid_argument("build_shortcuts: D must be >= 3");
  const Condensation cond = condense(g);
  const std::size_t n_plus = cond.dag.vertex_count();
  bool small = params.diameter <= cube_root_ceil(n_plus);
  if (mode == ShortcutMode::small) {
    if (!small) {
      throw std::invalid_argument("build_shortcuts: small mode needs D <= ceil(n+^(1/3)) = " +
                                  std::to_string(cube_root_ceil(n_plus)));
    }
  } else if (mode == ShortcutMode::large) {
    if (params.diameter < cube_root_floor(n_plus)) {
      throw std::invalid_argument("build_shortcuts: large mode needs D >= floor(n+^(1/3)) = " +
                                  std::to_string(cube_root_floor(n_plus)));
    }
    small = false;
  }
  const Rng rng(params.seed);
  Construction built =
      small ? small_diam_core(cond.dag, params.diameter, params.sampling_constant, rng)
            : large_d_core(cond.dag, params.diameter, params.sampling_constant, rng);

  std::vector<Edge> h_plus;
  std::map<Edge, Provenance> origin;
  for (const TaggedEdge& t : built.tagged) {
    h_plus.push_back(t.edge);
    origin.try_emplace({cond.representative(t.edge.from), cond.representative(t.edge.to)},
                       t.provenance);
  }
  std::vector<TaggedEdge> tagged;
  for (const Edge& e : lift_shortcuts(g, cond, h_plus)) {
    auto it = origin.find(e);
    tagged.push_back({e, it != origin.end() ? it->second : Provenance::lifted});
  }
  return ShortcutSet(std::move(tagged), params, built.stats);
}

std::vector<Edge> transitive_reduction(const Digraph& g) {
  const Condensation cond = condense(g);
  std::vector<Edge> reduction;
  for (const auto& component : cond.members) {
    if (component.size() < 2) continue;
    for (std::size_t i = 0; i < component.size(); ++i)
      reduction.push_back({component[i], component[(i + 1) % component.size()]});
  }

  const std::size_t k = cond.dag.vertex_count();
  const ReachabilityMatrix reach = transitive_closure(cond.dag);
  BitMatrix reached_by(k);  // transpose of reach
  for (Vertex a = 0; a < k; ++a)
    for (Vertex b = 0; b < k; ++b)
      if (reach.test(a, b)) reached_by.set(b, a);

  for (const Edge& e : cond.dag.edges()) {
    auto from_row = reach.row(e.from);
    auto into_row = reached_by.row(e.to);
    bool detour = false;
    for (std::size_t w = 0; w < from_row.size() && !detour; ++w) {
      std::uint64_t middle = from_row[w] & into_row[w];
      if (w == e.from / 64) middle &= ~(std::uint64_t{1} << (e.from % 64));
      if (w == e.to / 64) middle &= ~(std::uint64_t{1} << (e.to % 64));
      detour = middle != 0;
    }
    if (!detour) reduction.push_back({cond.representative(e.from), cond.representative(e.to)});
  }
  std::sort(reduction.begin(), reduction.end());
  return reduction;
}

std::vector<TaggedEdge> TcSpanner::tagged() const {
  std::vector<TaggedEdge> all;
  all.reserve(reduction.size() + shortcuts.size());
  for (const Edge& e : reduction) all.push_back({e, Provenance::reduction});
  all.insert(all.end(), shortcuts.tagged().begin(), shortcuts.tagged().end());
  std::stable_sort(all.begin(), all.end(),
                   [](const TaggedEdge& a, const TaggedEdge& b) { return a.edge < b.edge; });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const TaggedEdge& a, const TaggedEdge& b) { return a.edge == b.edge; }),
            all.end());
  return all;
}

TcSpanner tc_spanner(const Digraph& g, std::size_t k, double sampling_constant,
                     std::uint64_t seed) {
  if (k < 3) throw std::invalid_argument("tc_spanner: k must be >= 3");
  TcSpanner spanner;
  spanner.reduction = transitive_reduction(g);
  const Digraph reduced(g.vertex_count(), spanner.reduction);
  const bool cyclic = !is_acyclic(reduced);
  const std::size_t target = cyclic ? std::max<std::size_t>(3, k - 2) : k;
  spanner.shortcuts = build_shortcuts(reduced, {target, sampling_constant, seed});
  return spanner;
}

}  // namespace sforge
