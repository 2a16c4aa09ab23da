#include "shortcut_forge/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sforge {

// ---------------------------------------------------------------------------
// Report

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == CheckStatus::fail; });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void VerificationReport::record(std::string name, bool ok, std::string witness) {
  if (!ok && witness.empty()) witness = "unspecified";
  checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail,
                    ok ? std::string{} : std::move(witness)});
}

void VerificationReport::skip(std::string name, std::string reason) {
  checks.push_back({std::move(name), CheckStatus::skipped, std::move(reason)});
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["instance"] = instance;
  doc["passed"] = passed();
  auto& list = doc["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["status"] = c.status == CheckStatus::pass   ? "pass"
                      : c.status == CheckStatus::fail ? "fail"
                                                      : "skipped";
    if (!c.witness.empty()) entry["witness"] = c.witness;
    list.push_back(std::move(entry));
  }
  if (achieved_diameter) doc["achieved_diameter"] = *achieved_diameter;
  if (achieved_stretch) {
    if (std::isfinite(*achieved_stretch)) {
      doc["achieved_stretch"] = *achieved_stretch;
    } else {
      doc["achieved_stretch"] = nullptr;
    }
  }
  if (achieved_hops) doc["achieved_hops"] = *achieved_hops;
  return doc.dump(2);
}

namespace {

std::string pair_text(std::size_t u, std::size_t v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::string path_text(std::span<const Vertex> path) {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(path[i]);
  }
  return out + "]";
}

using Adjacency = std::vector<std::vector<Vertex>>;

Adjacency adjacency(std::size_t n, std::span<const Edge> edges) {
  Adjacency adj(n);
  for (const Edge& e : edges) adj[e.from].push_back(e.to);
  return adj;
}

std::vector<Weight> bfs_from(const Adjacency& adj, Vertex s) {
  std::vector<Weight> d(adj.size(), kInfinity);
  std::vector<Vertex> queue{s};
  d[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : adj[v]) {
      if (d[w] == kInfinity) {
        d[w] = d[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return d;
}

Weight add(Weight a, Weight b) { return (a == kInfinity || b == kInfinity) ? kInfinity : a + b; }

}  // namespace

// ---------------------------------------------------------------------------
// Primitive oracles

namespace oracle {

std::vector<std::vector<char>> reachability(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  Adjacency adj = adjacency(n, g.edges());
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    auto& row = reach[s];
    row[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj[v]) {
        if (!row[w]) {
          row[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return reach;
}

std::vector<std::vector<Weight>> bfs_all_pairs(std::size_t n, std::span<const Edge> edges) {
  const Adjacency adj = adjacency(n, edges);
  std::vector<std::vector<Weight>> d;
  d.reserve(n);
  for (Vertex s = 0; s < n; ++s) d.push_back(bfs_from(adj, s));
  return d;
}

std::vector<std::vector<Weight>> bellman_ford_all_pairs(std::size_t n,
                                                        std::span<const WeightedEdge> edges) {
  std::vector<std::vector<Weight>> d(n, std::vector<Weight>(n, kInfinity));
  for (Vertex s = 0; s < n; ++s) {
    auto& row = d[s];
    row[s] = 0;
    for (std::size_t round = 0; round + 1 < std::max<std::size_t>(n, 2); ++round) {
      bool changed = false;
      for (const WeightedEdge& e : edges) {
        const Weight candidate = add(row[e.from], e.weight);
        if (candidate < row[e.to]) {
          row[e.to] = candidate;
          changed = true;
        }
      }
      if (!changed) break;
    }
  }
  return d;
}

std::vector<std::vector<Weight>> enumerate_hop_bounded(const WeightedDigraph& g,
                                                       std::size_t hops) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<WeightedEdge>> adj(n);
  for (const WeightedEdge& e : g.edges()) adj[e.from].push_back(e);

  std::vector<std::vector<Weight>> best(n, std::vector<Weight>(n, kInfinity));
  std::vector<char> on_path(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    auto& row = best[s];
    // Recursive lambda over (vertex, length, depth).
    auto walk = [&](auto&& self, Vertex v, Weight length, std::size_t depth) -> void {
      row[v] = std::min(row[v], length);
      if (depth == hops) return;
      on_path[v] = 1;
      for (const WeightedEdge& e : adj[v])
        if (!on_path[e.to]) self(self, e.to, length + e.weight, depth + 1);
      on_path[v] = 0;
    };
    walk(walk, s, 0, 0);
  }
  return best;
}

std::size_t diameter(std::size_t n, std::span<const Edge> edges) {
  const auto d = bfs_all_pairs(n, edges);
  std::size_t worst = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && d[u][v] != kInfinity) worst = std::max<std::size_t>(worst, d[u][v]);
  return worst;
}

}  // namespace oracle

// ---------------------------------------------------------------------------
// Shortcut sets

VerificationReport verify_shortcut(const Digraph& g, std::span<const Edge> h,
                                   std::size_t diameter) {
  VerificationReport report;
  report.instance = "shortcut n=" + std::to_string(g.vertex_count()) +
                    " |H|=" + std::to_string(h.size()) + " D=" + std::to_string(diameter);
  const std::size_t n = g.vertex_count();
  const auto reach = oracle::reachability(g);

  std::string bad_edge;
  for (const Edge& e : h) {
    if (e.from >= n || e.to >= n || e.from == e.to || !reach[e.from][e.to]) {
      bad_edge = pair_text(e.from, e.to);
      break;
    }
  }
  report.record("closure_membership", bad_edge.empty(), bad_edge);

  std::vector<Edge> all(g.edges().begin(), g.edges().end());
  for (const Edge& e : h)
    if (e.from < n && e.to < n && e.from != e.to) all.push_back(e);
  const Adjacency adj = adjacency(n, all);

  std::string changed;
  std::size_t worst = 0;
  std::string worst_pair;
  for (Vertex u = 0; u < n; ++u) {
    const auto d = bfs_from(adj, u);
    for (Vertex v = 0; v < n; ++v) {
      const bool reachable = d[v] != kInfinity;
      if (changed.empty() && reachable != static_cast<bool>(reach[u][v])) changed = pair_text(u, v);
      if (u != v && reachable && d[v] > worst) {
        worst = static_cast<std::size_t>(d[v]);
        worst_pair = pair_text(u, v) + " at distance " + std::to_string(worst);
      }
    }
  }
  report.record("closure_preserved", changed.empty(), changed);
  report.achieved_diameter = worst;
  report.record("diameter", worst <= diameter, worst_pair);
  return report;
}

// ---------------------------------------------------------------------------
// Hopsets

VerificationReport verify_hopset(const WeightedDigraph& g, std::span<const WeightedEdge> h,
                                 std::size_t beta, Rational eps) {
  VerificationReport report;
  report.instance = "hopset n=" + std::to_string(g.vertex_count()) + " |H|=" +
                    std::to_string(h.size()) + " beta=" + std::to_string(beta) +
                    " eps=" + eps.str();
  const std::size_t n = g.vertex_count();
  const auto dist = oracle::bellman_ford_all_pairs(n, g.edges());

  std::string inexact;
  for (const WeightedEdge& e : h) {
    if (e.from >= n || e.to >= n || e.from == e.to || dist[e.from][e.to] != e.weight) {
      inexact = pair_text(e.from, e.to) + " weight " + std::to_string(e.weight);
      if (e.from < n && e.to < n) {
        const Weight truth = dist[e.from][e.to];
        inexact += truth == kInfinity ? " but unreachable" : " but distance " + std::to_string(truth);
      }
      break;
    }
  }
  report.record("exact_weights", inexact.empty(), inexact);

  std::vector<WeightedEdge> all(g.edges().begin(), g.edges().end());
  for (const WeightedEdge& e : h)
    if (e.from < n && e.to < n && e.from != e.to) all.push_back(e);

  std::string lower_witness;
  std::string upper_witness;
  double worst_stretch = 1.0;
  std::size_t needed_hops = 0;
  std::vector<Weight> current(n);
  std::vector<Weight> next(n);

  auto row_within = [&](Vertex s, const std::vector<Weight>& row) {
    for (Vertex v = 0; v < n; ++v)
      if (!within_stretch(row[v], dist[s][v], eps)) return false;
    return true;
  };

  for (Vertex s = 0; s < n; ++s) {
    std::fill(current.begin(), current.end(), kInfinity);
    current[s] = 0;
    std::optional<std::size_t> first_ok;
    if (row_within(s, current)) first_ok = 0;
    bool at_beta_recorded = beta == 0;

    auto inspect_beta = [&] {
      for (Vertex v = 0; v < n; ++v) {
        if (current[v] < dist[s][v] && lower_witness.empty()) {
          lower_witness = pair_text(s, v) + " reached with " + std::to_string(current[v]) +
                          " below distance " + std::to_string(dist[s][v]);
        }
        if (dist[s][v] == kInfinity || s == v) continue;
        if (current[v] == kInfinity) {
          worst_stretch = std::numeric_limits<double>::infinity();
        } else {
          worst_stretch = std::max(worst_stretch, static_cast<double>(current[v]) /
                                                      static_cast<double>(dist[s][v]));
        }
        if (!within_stretch(current[v], dist[s][v], eps) && upper_witness.empty()) {
          upper_witness = pair_text(s, v) + " needs " +
                          (current[v] == kInfinity ? std::string("more than ")
                                                   : std::to_string(current[v]) + " within ") +
                          std::to_string(beta) + " hops vs distance " +
                          std::to_string(dist[s][v]);
        }
      }
    };
    if (beta == 0) inspect_beta();

    for (std::size_t round = 1;; ++round) {
      next = current;
      bool changed = false;
      for (const WeightedEdge& e : all) {
        const Weight candidate = add(current[e.from], e.weight);
        if (candidate < next[e.to]) {
          next[e.to] = candidate;
          changed = true;
        }
      }
      current.swap(next);
      if (!first_ok && row_within(s, current)) first_ok = round;
      if (round == beta) {
        inspect_beta();
        at_beta_recorded = true;
      }
      if (!changed && at_beta_recorded) break;
      if (!changed && !at_beta_recorded) {
        inspect_beta();  // fixpoint before beta: the beta-row is this row
        at_beta_recorded = true;
        break;
      }
    }
    needed_hops = std::max(needed_hops, first_ok.value_or(std::numeric_limits<std::size_t>::max()));
  }

  report.record("lower_side", lower_witness.empty(), lower_witness);
  report.record("upper_side", upper_witness.empty(), upper_witness);
  report.achieved_stretch = worst_stretch;
  report.achieved_hops = needed_hops;
  return report;
}

// ---------------------------------------------------------------------------
// Nice path collections

namespace {

/// Smallest length of an h-hop path of the closure restricted to `live` whose
/// length equals the distance of its endpoints. Fills `witness` with it.
std::optional<Weight> min_tight_path(const std::vector<std::vector<Weight>>& dist,
                                     const std::vector<char>& live, std::size_t h,
                                     std::vector<Vertex>& witness) {
  const std::size_t n = dist.size();
  std::optional<Weight> best;
  std::vector<Vertex> path;
  std::vector<char> used(n, 0);

  auto extend = [&](auto&& self, Weight length) -> void {
    const Vertex start = path.front();
    const Vertex tip = path.back();
    if (path.size() == h + 1) {
      if (!best || length < *best) {
        best = length;
        witness = path;
      }
      return;
    }
    for (Vertex next = 0; next < n; ++next) {
      if (!live[next] || used[next] || dist[tip][next] == kInfinity) continue;
      const Weight total = length + dist[tip][next];
      // A prefix of a shortest path is itself shortest.
      if (total != dist[start][next]) continue;
      used[next] = 1;
      path.push_back(next);
      self(self, total);
      path.pop_back();
      used[next] = 0;
    }
  };

  for (Vertex s = 0; s < n; ++s) {
    if (!live[s]) continue;
    path.assign(1, s);
    used[s] = 1;
    extend(extend, 0);
    used[s] = 0;
  }
  return best;
}

}  // namespace

VerificationReport verify_nice(const WeightedDigraph& g, const NicePathCollection& q) {
  VerificationReport report;
  const std::size_t n = g.vertex_count();
  const std::size_t h = q.beta / 12;
  report.instance = "nice n=" + std::to_string(n) + " beta=" + std::to_string(q.beta) +
                    " paths=" + std::to_string(q.paths.size());
  const auto dist = oracle::bellman_ford_all_pairs(n, g.edges());

  std::string n1;
  std::string n2;
  std::string n3;
  std::string n4;
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < q.paths.size(); ++i) {
    const NicePath& p = q.paths[i];
    const std::string label = "path " + std::to_string(i) + " " + path_text(p.vertices);
    for (Vertex v : p.vertices) {
      if (v >= n || seen[v]) {
        if (n1.empty()) n1 = label + " reuses or misnames vertex " + std::to_string(v);
      } else {
        seen[v] = 1;
      }
    }
    if (p.vertices.size() != h + 1 && n2.empty()) {
      n2 = label + " has " + std::to_string(p.vertices.size() - 1) + " hops, expected " +
           std::to_string(h);
    }
    if (!n1.empty() || p.vertices.size() < 2) continue;
    Weight total = 0;
    for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
      const Weight d = dist[p.vertices[k]][p.vertices[k + 1]];
      if (d == kInfinity || p.vertices[k] == p.vertices[k + 1]) {
        if (n1.empty()) n1 = label + " hop " + std::to_string(k) + " is not a closure edge";
        total = kInfinity;
        break;
      }
      total += d;
    }
    const Weight span = dist[p.vertices.front()][p.vertices.back()];
    if (total != kInfinity && (total != span || p.length != span) && n3.empty()) {
      n3 = label + " has length " + std::to_string(total) + " (stated " +
           std::to_string(p.length) + ") but endpoint distance " + std::to_string(span);
    }
    if (i > 0 && q.paths[i - 1].length > p.length && n4.empty()) {
      n4 = "path " + std::to_string(i - 1) + " longer than path " + std::to_string(i);
    }
  }
  report.record("N1_disjoint_closure_paths", n1.empty(), n1);
  report.record("N2_hop_count", n2.empty(), n2);
  report.record("N3_shortest", n3.empty(), n3);
  report.record("N4_nondecreasing", n4.empty(), n4);

  if (n > kNiceEnumerationLimit) {
    const std::string reason = "n = " + std::to_string(n) + " exceeds the enumeration limit";
    report.skip("N5_locally_minimal", reason);
    report.skip("N6_maximal", reason);
    return report;
  }
  if (!n1.empty() || !n2.empty()) {
    report.skip("N5_locally_minimal", "N1/N2 failed");
    report.skip("N6_maximal", "N1/N2 failed");
    return report;
  }

  std::vector<char> live(n, 1);
  std::string n5;
  std::vector<Vertex> witness;
  for (std::size_t i = 0; i < q.paths.size() && n5.empty(); ++i) {
    const auto best = min_tight_path(dist, live, h, witness);
    if (!best || *best != q.paths[i].length) {
      n5 = "path " + std::to_string(i) + " has length " + std::to_string(q.paths[i].length) +
           (best ? "; residual admits " + path_text(witness) + " of length " + std::to_string(*best)
                 : std::string("; residual has no tight path"));
    }
    for (Vertex v : q.paths[i].vertices) live[v] = 0;
  }
  report.record("N5_locally_minimal", n5.empty(), n5);
  if (!n5.empty()) {
    report.skip("N6_maximal", "N5 failed");
    return report;
  }
  const auto leftover = min_tight_path(dist, live, h, witness);
  report.record("N6_maximal", !leftover.has_value(),
                leftover ? "residual still has " + path_text(witness) : std::string{});
  return report;
}

// ---------------------------------------------------------------------------
// Lower-bound instances

VerificationReport check_lb_properties(const Digraph& g,
                                       std::span<const std::vector<Vertex>> paths,
                                       const LbThresholds& thresholds) {
  VerificationReport report;
  const std::size_t n = g.vertex_count();
  report.instance = "lb n=" + std::to_string(n) + " paths=" + std::to_string(paths.size());

  std::vector<std::size_t> in_deg(n, 0);
  std::vector<std::size_t> out_deg(n, 0);
  for (const Edge& e : g.edges()) {
    ++out_deg[e.from];
    ++in_deg[e.to];
  }
  std::size_t max_in = 0;
  std::size_t max_out = 0;
  std::string degree_witness;
  for (Vertex v = 0; v < n; ++v) {
    max_in = std::max(max_in, in_deg[v]);
    max_out = std::max(max_out, out_deg[v]);
    if (degree_witness.empty() &&
        (in_deg[v] > thresholds.max_degree || out_deg[v] > thresholds.max_degree)) {
      degree_witness = "vertex " + std::to_string(v) + " in=" + std::to_string(in_deg[v]) +
                       " out=" + std::to_string(out_deg[v]);
    }
  }
  report.record("P1_degree_bound", degree_witness.empty(), degree_witness);

  std::set<std::pair<Vertex, Vertex>> edge_set;
  for (const Edge& e : g.edges()) edge_set.insert({e.from, e.to});
  std::string path_witness;
  for (std::size_t i = 0; i < paths.size() && path_witness.empty(); ++i) {
    const auto& p = paths[i];
    if (p.empty()) {
      path_witness = "path " + std::to_string(i) + " is empty";
      break;
    }
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      if (!edge_set.count({p[k], p[k + 1]})) {
        path_witness = "path " + std::to_string(i) + " lacks edge " + pair_text(p[k], p[k + 1]);
        break;
      }
    }
    if (path_witness.empty() && thresholds.path_length && p.size() - 1 != *thresholds.path_length) {
      path_witness = "path " + std::to_string(i) + " has " + std::to_string(p.size() - 1) +
                     " edges, expected " + std::to_string(*thresholds.path_length);
    }
  }
  report.record("P2_paths_and_lengths", path_witness.empty(), path_witness);

  // (6) first: path counting needs a topological order.
  const Adjacency adj = adjacency(n, g.edges());
  std::vector<int> color(n, 0);
  std::vector<Vertex> post;
  std::string cycle_witness;
  for (Vertex root = 0; root < n && cycle_witness.empty(); ++root) {
    if (color[root]) continue;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty() && cycle_witness.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        const Vertex w = adj[v][next++];
        if (color[w] == 1) {
          cycle_witness = "back edge " + pair_text(v, w);
        } else if (color[w] == 0) {
          color[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        color[v] = 2;
        post.push_back(v);
        stack.pop_back();
      }
    }
  }
  const bool acyclic = cycle_witness.empty();

  if (acyclic) {
    std::string unique_witness;
    std::vector<Vertex> topo(post.rbegin(), post.rend());
    for (std::size_t i = 0; i < paths.size() && unique_witness.empty(); ++i) {
      if (paths[i].empty()) continue;
      const Vertex s = paths[i].front();
      const Vertex t = paths[i].back();
      std::vector<unsigned> count(n, 0);  // saturates at 2
      count[s] = 1;
      for (Vertex v : topo) {
        if (!count[v]) continue;
        for (Vertex w : adj[v]) count[w] = std::min(2U, count[w] + count[v]);
      }
      if (count[t] != 1) {
        unique_witness = "path " + std::to_string(i) + " endpoints " + pair_text(s, t) +
                         (count[t] == 0 ? " are not connected" : " have several paths");
      }
    }
    report.record("P3_unique_paths", unique_witness.empty(), unique_witness);
  } else {
    report.skip("P3_unique_paths", "graph has a cycle");
  }

  std::string overlap;
  std::vector<std::set<Vertex>> members;
  for (const auto& p : paths) members.emplace_back(p.begin(), p.end());
  for (std::size_t i = 0; i < paths.size() && overlap.empty(); ++i) {
    for (std::size_t j = i + 1; j < paths.size() && overlap.empty(); ++j) {
      std::size_t shared = 0;
      for (Vertex v : members[i]) shared += members[j].count(v);
      if (shared > 1) {
        overlap = "paths " + std::to_string(i) + " and " + std::to_string(j) + " share " +
                  std::to_string(shared) + " vertices";
      }
    }
  }
  report.record("P4_pairwise_intersection", overlap.empty(), overlap);

  std::vector<std::size_t> load(n, 0);
  for (const auto& m : members)
    for (Vertex v : m)
      if (v < n) ++load[v];
  std::string load_witness;
  const std::size_t load_cap = std::max(max_in, max_out);
  for (Vertex v = 0; v < n && load_witness.empty(); ++v) {
    if (load[v] > load_cap) {
      load_witness = "vertex " + std::to_string(v) + " lies on " + std::to_string(load[v]) +
                     " paths, cap " + std::to_string(load_cap);
    }
  }
  report.record("P5_vertex_load", load_witness.empty(), load_witness);
  report.record("P6_acyclic", acyclic, cycle_witness);
  return report;
}

// ---------------------------------------------------------------------------
// Decompositions, partitions and ladders

VerificationReport check_decomposition(const Digraph& dag, const ChainDecomposition& d,
                                       std::size_t ell) {
  VerificationReport report;
  const std::size_t n = dag.vertex_count();
  report.instance = "decomposition n=" + std::to_string(n) + " ell=" + std::to_string(ell);

  std::vector<std::size_t> hits(n, 0);
  std::string cover;
  auto tally = [&](const std::vector<Vertex>& group) {
    for (Vertex v : group) {
      if (v >= n) {
        if (cover.empty()) cover = "vertex " + std::to_string(v) + " out of range";
      } else {
        ++hits[v];
      }
    }
  };
  for (const auto& c : d.chains) tally(c);
  for (const auto& a : d.antichains) tally(a);
  for (Vertex v = 0; v < n && cover.empty(); ++v) {
    if (hits[v] != 1) {
      cover = "vertex " + std::to_string(v) + " covered " + std::to_string(hits[v]) + " times";
    }
  }
  report.record("exact_cover", cover.empty(), cover);

  std::set<std::pair<Vertex, Vertex>> edge_set;
  for (const Edge& e : dag.edges()) edge_set.insert({e.from, e.to});

  std::string chain_witness;
  for (std::size_t i = 0; i < d.chains.size() && chain_witness.empty(); ++i) {
    const auto& c = d.chains[i];
    if (c.empty()) chain_witness = "chain " + std::to_string(i) + " is empty";
    for (std::size_t k = 0; k + 1 < c.size() && chain_witness.empty(); ++k) {
      if (!edge_set.count({c[k], c[k + 1]}))
        chain_witness = "chain " + std::to_string(i) + " lacks edge " + pair_text(c[k], c[k + 1]);
    }
  }
  report.record("chains_are_paths", chain_witness.empty(), chain_witness);

  std::string anti_witness;
  for (std::size_t i = 0; i < d.antichains.size() && anti_witness.empty(); ++i) {
    const std::set<Vertex> group(d.antichains[i].begin(), d.antichains[i].end());
    for (const Edge& e : dag.edges()) {
      if (group.count(e.from) && group.count(e.to)) {
        anti_witness = "antichain " + std::to_string(i) + " contains edge " + pair_text(e.from, e.to);
        break;
      }
    }
  }
  report.record("antichains_independent", anti_witness.empty(), anti_witness);

  report.record("chain_budget", d.chains.size() <= ell,
                std::to_string(d.chains.size()) + " chains > " + std::to_string(ell));
  const std::size_t budget = ell == 0 ? 0 : (2 * n + ell - 1) / ell;
  report.record("antichain_budget", d.antichains.size() <= budget,
                std::to_string(d.antichains.size()) + " antichains > " + std::to_string(budget));
  return report;
}

VerificationReport check_subpath_partition(const NicePathCollection& q,
                                           const SubpathPartition& partition) {
  VerificationReport report;
  report.instance = "partition paths=" + std::to_string(q.paths.size()) +
                    " eps=" + partition.eps.str();
  const Rational eps = partition.eps;
  // ceil(2/eps) + 1 = ceil(2 den / num) + 1
  const std::size_t piece_cap = static_cast<std::size_t>((2 * eps.den + eps.num - 1) / eps.num) + 1;

  std::string cover;
  std::string length;
  std::string count;
  if (partition.pieces.size() != q.paths.size()) cover = "piece lists do not match paths";
  for (std::size_t i = 0; i < q.paths.size() && cover.empty(); ++i) {
    const NicePath& path = q.paths[i];
    std::vector<Vertex> joined;
    for (const Subpath& piece : partition.pieces[i]) {
      Weight piece_len = 0;
      for (std::size_t k = 0; k + 1 < piece.vertices.size(); ++k) {
        // piece vertices are consecutive on the path, so locate the hop
        const auto at = std::find(path.vertices.begin(), path.vertices.end(), piece.vertices[k]);
        const auto idx = static_cast<std::size_t>(at - path.vertices.begin());
        if (at == path.vertices.end() || idx + 1 >= path.vertices.size() ||
            path.vertices[idx + 1] != piece.vertices[k + 1]) {
          cover = "piece of path " + std::to_string(i) + " is not contiguous";
          break;
        }
        piece_len += path.hop_lengths[idx];
      }
      // len(piece) <= eps * len(path)  <=>  len * den <= num * len(path)
      if (static_cast<unsigned __int128>(piece_len) * eps.den >
              static_cast<unsigned __int128>(path.length) * eps.num &&
          length.empty()) {
        length = "path " + std::to_string(i) + " piece " + path_text(piece.vertices) +
                 " has length " + std::to_string(piece_len);
      }
      joined.insert(joined.end(), piece.vertices.begin(), piece.vertices.end());
    }
    if (cover.empty() && joined != path.vertices) {
      cover = "pieces of path " + std::to_string(i) + " do not reproduce " +
              path_text(path.vertices);
    }
    if (partition.pieces[i].size() > piece_cap && count.empty()) {
      count = "path " + std::to_string(i) + " has " + std::to_string(partition.pieces[i].size()) +
              " pieces > " + std::to_string(piece_cap);
    }
  }
  report.record("cover_disjoint_in_order", cover.empty(), cover);
  report.record("piece_length", length.empty(), length);
  report.record("piece_count", count.empty(), count);
  return report;
}

VerificationReport check_ladder(const WeightedDigraph& g, Vertex v, std::span<const Vertex> piece,
                                std::span<const WeightedEdge> ladder, Rational eps) {
  VerificationReport report;
  const std::size_t n = g.vertex_count();
  report.instance = "ladder v=" + std::to_string(v) + " piece=" + path_text(piece);
  const auto dist = oracle::bellman_ford_all_pairs(n, g.edges());

  std::string exact;
  std::vector<std::size_t> position;
  for (const WeightedEdge& e : ladder) {
    const auto at = std::find(piece.begin(), piece.end(), e.to);
    if (e.from != v || at == piece.end() || dist[v][e.to] != e.weight) {
      exact = pair_text(e.from, e.to) + " weight " + std::to_string(e.weight);
      break;
    }
    position.push_back(static_cast<std::size_t>(at - piece.begin()));
  }
  report.record("ladder_edges_exact", exact.empty(), exact);

  std::string cover;
  if (exact.empty()) {
    for (std::size_t i = 0; i < piece.size() && cover.empty(); ++i) {
      const Vertex u = piece[i];
      if (u == v || dist[v][u] == kInfinity) continue;
      bool served = false;
      for (std::size_t k = 0; k < ladder.size() && !served; ++k)
        served = position[k] <= i && within_stretch(ladder[k].weight, dist[v][u], eps);
      if (!served) cover = "vertex " + std::to_string(u) + " has no ladder edge within stretch";
    }
  }
  report.record("ladder_covers_piece", cover.empty(), cover);

  Weight max_w = 1;
  for (const WeightedEdge& e : g.edges()) max_w = std::max(max_w, e.weight);
  // ceil(log_{1+eps}(nW)) + 1, computed independently of the hopset module.
  const double bound = std::ceil(std::log(static_cast<double>(n) * static_cast<double>(max_w)) /
                                 std::log1p(eps.value()) - 1e-12) + 1.0;
  report.record("ladder_size", static_cast<double>(ladder.size()) <= std::max(bound, 1.0),
                std::to_string(ladder.size()) + " edges > bound " + std::to_string(bound));
  return report;
}

}  // namespace sforge
