#include "shortcut_forge/hopset_algos.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "shortcut_forge/rng.hpp"
#include "shortcut_forge/shortcut_algos.hpp"

namespace sforge {

using Wide = unsigned __int128;

// ---------------------------------------------------------------------------
// Rational

namespace {

std::uint64_t parse_unsigned(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("cannot parse rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Rational r;
  if (slash == std::string_view::npos) {
    r = {parse_unsigned(text, text), 1};
  } else {
    r = {parse_unsigned(text.substr(0, slash), text), parse_unsigned(text.substr(slash + 1), text)};
  }
  if (r.den == 0) throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
  if (r.num == 0) throw std::invalid_argument("rational '" + std::string(text) + "' must be positive");
  return r;
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

bool within_stretch(Weight a, Weight b, Rational eps) {
  if (b == kInfinity) return true;
  if (a == kInfinity) return false;
  return Wide{a} * eps.den <= Wide{b} * (Wide{eps.den} + eps.num);
}

bool stretched_below(Weight a, Weight b, Rational eps) {
  if (a == kInfinity) return false;
  if (b == kInfinity) return true;
  return Wide{a} * (Wide{eps.den} + eps.num) < Wide{b} * eps.den;
}

namespace {

void require_open_unit(Rational eps, const char* who) {
  if (eps.num == 0 || eps.num >= eps.den) {
    throw std::invalid_argument(std::string(who) + ": eps = " + eps.str() + " must lie in (0,1)");
  }
}

void require_beta(std::size_t beta, const char* who) {
  if (beta < 12) {
    throw std::invalid_argument(std::string(who) + ": beta = " + std::to_string(beta) +
                                " is below 12, so beta/12 hops would be zero");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Nice path collection

NicePathCollection nice_collection(const WeightedDigraph& g, std::size_t beta) {
  require_beta(beta, "nice_collection");
  return nice_collection(apsp(g), beta);
}

NicePathCollection nice_collection(const DistanceMatrix& dist, std::size_t beta) {
  require_beta(beta, "nice_collection");
  NicePathCollection q;
  q.beta = beta;
  const std::size_t h = beta / 12;
  const std::size_t n = dist.size();
  std::vector<char> live(n, 1);

  // walk[k] holds D_{k+1} over the live vertices; back[k] the middle vertex of
  // the last hop for k >= 1.
  std::vector<DistanceMatrix> walk;
  std::vector<std::vector<Vertex>> back;

  for (;;) {
    std::vector<Vertex> alive;
    for (Vertex v = 0; v < n; ++v)
      if (live[v]) alive.push_back(v);
    const std::size_t m = alive.size();
    if (m < h + 1) break;

    auto one_hop = [&](std::size_t a, std::size_t b) -> Weight {
      return a == b ? kInfinity : dist.at(alive[a], alive[b]);
    };

    walk.assign(1, DistanceMatrix(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) walk[0].at(a, b) = one_hop(a, b);
    back.assign(1, {});
    for (std::size_t k = 1; k < h; ++k) {
      DistanceMatrix next(m);
      std::vector<Vertex> pred(m * m, 0);
      const DistanceMatrix& prev = walk[k - 1];
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t mid = 0; mid < m; ++mid) {
          const Weight head = prev.at(a, mid);
          if (head == kInfinity) continue;
          for (std::size_t b = 0; b < m; ++b) {
            const Weight tail = walk[0].at(mid, b);
            if (tail == kInfinity) continue;
            const Weight total = head + tail;
            // mid ascends, so strict < keeps the smallest middle vertex
            if (total < next.at(a, b)) {
              next.at(a, b) = total;
              pred[a * m + b] = static_cast<Vertex>(mid);
            }
          }
        }
      }
      walk.push_back(std::move(next));
      back.push_back(std::move(pred));
    }

    const DistanceMatrix& last = walk[h - 1];
    std::size_t best_a = m;
    std::size_t best_b = m;
    Weight best = kInfinity;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (a == b) continue;
        const Weight d = dist.at(alive[a], alive[b]);
        if (d == kInfinity || last.at(a, b) != d) continue;
        if (d < best) {
          best = d;
          best_a = a;
          best_b = b;
        }
      }
    }
    if (best_a == m) break;

    std::vector<std::size_t> local(h + 1);
    local[h] = best_b;
    for (std::size_t k = h - 1; k >= 1; --k) local[k] = back[k][best_a * m + local[k + 1]];
    local[0] = best_a;

    NicePath path;
    for (std::size_t idx : local) path.vertices.push_back(alive[idx]);
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
      path.hop_lengths.push_back(dist.at(path.vertices[i], path.vertices[i + 1]));
    path.length = best;
    for (Vertex v : path.vertices) live[v] = 0;
    q.paths.push_back(std::move(path));
  }
  return q;
}

// ---------------------------------------------------------------------------
// Pieces and ladders

SubpathPartition partition_subpaths(const NicePathCollection& q, Rational eps) {
  require_open_unit(eps, "partition_subpaths");
  SubpathPartition partition;
  partition.eps = eps;
  for (std::size_t i = 0; i < q.paths.size(); ++i) {
    const NicePath& path = q.paths[i];
    const Wide budget = Wide{path.length} * eps.num;  // compared against len * den
    std::vector<Subpath> pieces;
    std::size_t start = 0;
    while (start < path.vertices.size()) {
      std::size_t end = start;
      Weight acc = 0;
      while (end + 1 < path.vertices.size() &&
             Wide{acc + path.hop_lengths[end]} * eps.den <= budget) {
        acc += path.hop_lengths[end];
        ++end;
      }
      Subpath piece;
      piece.source_path = i;
      piece.vertices.assign(path.vertices.begin() + static_cast<std::ptrdiff_t>(start),
                            path.vertices.begin() + static_cast<std::ptrdiff_t>(end) + 1);
      piece.length = acc;
      pieces.push_back(std::move(piece));
      start = end + 1;  // hop (end, end+1) is not part of any piece
    }
    partition.pieces.push_back(std::move(pieces));
  }
  return partition;
}

std::vector<WeightedEdge> geometric_ladder(const DistanceMatrix& dist, Vertex v,
                                           std::span<const Vertex> piece, Rational eps) {
  std::vector<WeightedEdge> ladder;
  std::size_t i = 0;
  while (i < piece.size() && (piece[i] == v || dist.at(v, piece[i]) == kInfinity)) ++i;
  if (i == piece.size()) return ladder;
  Weight current = dist.at(v, piece[i]);
  ladder.push_back({v, piece[i], current});
  for (++i; i < piece.size(); ++i) {
    if (piece[i] == v) continue;
    const Weight d = dist.at(v, piece[i]);
    if (stretched_below(d, current, eps)) {
      ladder.push_back({v, piece[i], d});
      current = d;
    }
  }
  return ladder;
}

std::size_t ladder_size_bound(std::size_t n, Weight max_weight, Rational eps) {
  const long double target = static_cast<long double>(n) * static_cast<long double>(max_weight);
  const long double factor = 1.0L + static_cast<long double>(eps.num) / eps.den;
  std::size_t steps = 0;
  for (long double reach = 1.0L; reach < target; reach *= factor) ++steps;
  return steps + 1;
}

// ---------------------------------------------------------------------------
// Hopsets

std::string_view to_string(HopsetProvenance p) {
  switch (p) {
    case HopsetProvenance::induced_closure: return "induced_closure";
    case HopsetProvenance::geometric_ladder: return "geometric_ladder";
    case HopsetProvenance::recursive: return "recursive";
  }
  return "unknown";
}

std::optional<HopsetProvenance> parse_hopset_provenance(std::string_view text) {
  for (HopsetProvenance p : {HopsetProvenance::induced_closure,
                             HopsetProvenance::geometric_ladder, HopsetProvenance::recursive}) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

HopsetEdges::HopsetEdges(std::vector<TaggedWeightedEdge> tagged, HopsetParams params,
                         HopsetStats stats)
    : tagged_(std::move(tagged)), params_(params), stats_(stats) {
  auto key_less = [](const TaggedWeightedEdge& a, const TaggedWeightedEdge& b) {
    return std::pair(a.edge.from, a.edge.to) < std::pair(b.edge.from, b.edge.to);
  };
  std::stable_sort(tagged_.begin(), tagged_.end(), key_less);
  tagged_.erase(std::unique(tagged_.begin(), tagged_.end(),
                            [](const TaggedWeightedEdge& a, const TaggedWeightedEdge& b) {
                              return a.edge.from == b.edge.from && a.edge.to == b.edge.to;
                            }),
                tagged_.end());
}

std::vector<WeightedEdge> HopsetEdges::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(tagged_.size());
  for (const auto& t : tagged_) out.push_back(t.edge);
  return out;
}

std::size_t HopsetEdges::count(HopsetProvenance p) const {
  return static_cast<std::size_t>(std::count_if(
      tagged_.begin(), tagged_.end(), [p](const auto& t) { return t.provenance == p; }));
}

std::size_t fourth_root_floor(std::size_t n) {
  std::size_t r = 0;
  auto pow4 = [](std::size_t x) { return x * x * x * x; };
  while (pow4(r + 1) <= n) ++r;
  return r;
}

std::size_t fourth_root_ceil(std::size_t n) {
  const std::size_t r = fourth_root_floor(n);
  return r * r * r * r == n ? r : r + 1;
}

namespace {

struct HopsetConstruction {
  std::vector<TaggedWeightedEdge> tagged;
  HopsetStats stats;
};

HopsetConstruction small_hop_core(const WeightedDigraph& g, std::size_t beta, Rational eps,
                                  double c, const Rng& rng) {
  HopsetConstruction out;
  const std::size_t n = g.vertex_count();
  if (n < 2) return out;
  const DistanceMatrix dist = apsp(g);
  const NicePathCollection q = nice_collection(dist, beta);
  out.stats.nice_paths = q.paths.size();

  for (const NicePath& path : q.paths) {
    for (Vertex a : path.vertices)
      for (Vertex b : path.vertices)
        if (a != b && dist.at(a, b) != kInfinity)
          out.tagged.push_back({{a, b, dist.at(a, b)}, HopsetProvenance::induced_closure});
  }

  const SubpathPartition partition = partition_subpaths(q, eps.halved());
  std::vector<const Subpath*> pieces;
  for (const auto& per_path : partition.pieces)
    for (const Subpath& piece : per_path) pieces.push_back(&piece);
  out.stats.pieces = pieces.size();

  const double p = sampling_probability(c, n, static_cast<double>(beta));
  Rng vertex_rng = rng.fork("hopset_small/vertices");
  Rng piece_rng = rng.fork("hopset_small/pieces");
  const std::vector<Vertex> vertices = bernoulli_sample(vertex_rng, n, p);
  const std::vector<Vertex> chosen = bernoulli_sample(piece_rng, pieces.size(), p);
  out.stats.sampled_vertices = vertices.size();
  out.stats.sampled_pieces = chosen.size();

  for (Vertex v : vertices) {
    for (Vertex id : chosen) {
      for (const WeightedEdge& e : geometric_ladder(dist, v, pieces[id]->vertices, eps.halved()))
        out.tagged.push_back({e, HopsetProvenance::geometric_ladder});
    }
  }
  return out;
}

/// ceil(beta^(4/3) / n^(1/3)), at least 1.
std::size_t large_hop_radius(std::size_t beta, std::size_t n) {
  const double raw = std::pow(static_cast<double>(beta), 4.0 / 3.0) /
                     std::cbrt(static_cast<double>(n));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(raw - 1e-9)));
}

}  // namespace

HopsetEdges hopset_small_hop(const WeightedDigraph& g, const HopsetParams& params) {
  require_beta(params.beta, "hopset_small_hop");
  require_open_unit(params.eps, "hopset_small_hop");
  HopsetConstruction built = small_hop_core(g, params.beta, params.eps,
                                            params.sampling_constant, Rng(params.seed));
  return HopsetEdges(std::move(built.tagged), params, built.stats);
}

HopsetEdges hopset_large_hop(const WeightedDigraph& g, const HopsetParams& params) {
  const std::size_t n = g.vertex_count();
  require_beta(params.beta, "hopset_large_hop");
  require_open_unit(params.eps, "hopset_large_hop");
  if (params.beta < fourth_root_floor(n)) {
    throw std::invalid_argument("hopset_large_hop: beta below floor(n^(1/4))");
  }
  HopsetStats stats;
  if (n < 2) return HopsetEdges({}, params, stats);

  const double dn = static_cast<double>(n);
  const double wanted = params.sampling_constant *
                        std::pow(dn / static_cast<double>(params.beta), 4.0 / 3.0) * std::log(dn);
  const std::size_t target =
      std::min(n, static_cast<std::size_t>(std::ceil(std::max(0.0, wanted))));
  Rng vertex_rng = Rng(params.seed).fork("hopset_large/vertices");
  const std::vector<Vertex> kept = fixed_size_sample(vertex_rng, n, target);
  const std::size_t r = large_hop_radius(params.beta, n);
  stats.sampled_vertices = kept.size();
  stats.reduced_vertices = kept.size();
  stats.hop_radius = r;
  if (kept.size() < 2) return HopsetEdges({}, params, stats);

  const DistanceMatrix dist = apsp(g);
  const DistanceMatrix limited = hop_limited_dist(g, r);
  std::vector<WeightedEdge> reduced_edges;
  for (Vertex i = 0; i < kept.size(); ++i) {
    for (Vertex j = 0; j < kept.size(); ++j) {
      if (i == j) continue;
      const Weight d = dist.at(kept[i], kept[j]);
      if (d != kInfinity && limited.at(kept[i], kept[j]) == d) reduced_edges.push_back({i, j, d});
    }
  }
  const WeightedDigraph reduced(kept.size(), std::move(reduced_edges));

  const double inner_scale =
      std::pow(static_cast<double>(kept.size()), 0.25) / std::log(dn);
  const std::size_t inner_beta =
      std::max<std::size_t>(12, static_cast<std::size_t>(std::floor(inner_scale)));
  stats.inner_beta = inner_beta;

  HopsetConstruction inner = small_hop_core(reduced, inner_beta, params.eps,
                                            params.sampling_constant,
                                            Rng(params.seed).fork("hopset_large/recursion"));
  stats.nice_paths = inner.stats.nice_paths;
  stats.pieces = inner.stats.pieces;
  stats.sampled_pieces = inner.stats.sampled_pieces;

  std::vector<TaggedWeightedEdge> tagged;
  tagged.reserve(inner.tagged.size());
  for (const auto& t : inner.tagged) {
    const Vertex u = kept[t.edge.from];
    const Vertex v = kept[t.edge.to];
    tagged.push_back({{u, v, dist.at(u, v)}, HopsetProvenance::recursive});
  }
  return HopsetEdges(std::move(tagged), params, stats);
}

HopsetEdges build_hopset(const WeightedDigraph& g, const HopsetParams& params) {
  if (params.beta <= fourth_root_ceil(g.vertex_count())) return hopset_small_hop(g, params);
  return hopset_large_hop(g, params);
}

}  // namespace sforge
