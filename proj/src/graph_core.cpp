#include "shortcut_forge/graph_core.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace sforge {

void check_vertex_ceiling(std::size_t n) {
  if (n > kMaxVertices) {
    throw std::length_error("graph has " + std::to_string(n) +
                            " vertices; the supported maximum is " +
                            std::to_string(kMaxVertices));
  }
}

namespace {

void check_endpoints(std::size_t n, Vertex u, Vertex v) {
  if (u >= n || v >= n) {
    throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has an endpoint outside [0," + std::to_string(n) + ")");
  }
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  check_vertex_ceiling(n);
  for (const Edge& e : edges_) check_endpoints(n_, e.from, e.to);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  out_offsets_.assign(n_ + 1, 0);
  in_offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.from + 1];
    ++in_offsets_[e.to + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_targets_.resize(edges_.size());
  in_sources_.resize(edges_.size());
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_targets_[i] = edges_[i].to;  // edges_ is sorted by source
    in_sources_[in_fill[edges_[i].to]++] = edges_[i].from;
  }
}

std::span<const Vertex> Digraph::out(Vertex v) const noexcept {
  return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const Vertex> Digraph::in(Vertex v) const noexcept {
  return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

bool Digraph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= n_) return false;
  auto targets = out(u);
  return std::binary_search(targets.begin(), targets.end(), v);
}

// ---------------------------------------------------------------------------
// WeightedDigraph

WeightedDigraph::WeightedDigraph(std::size_t n, std::vector<WeightedEdge> edges,
                                 Weight max_weight)
    : n_(n), edges_(std::move(edges)) {
  check_vertex_ceiling(n);
  Weight largest = 1;
  for (const WeightedEdge& e : edges_) {
    check_endpoints(n_, e.from, e.to);
    if (e.weight < 1) throw std::invalid_argument("edge weight must be >= 1");
    largest = std::max(largest, e.weight);
  }
  if (max_weight == 0) {
    max_weight_ = largest;
  } else {
    if (largest > max_weight) {
      throw std::invalid_argument("edge weight " + std::to_string(largest) +
                                  " exceeds the declared bound " + std::to_string(max_weight));
    }
    max_weight_ = max_weight;
  }

  std::sort(edges_.begin(), edges_.end());
  // Sorted by (from, to, weight): the first of each (from, to) run is the lightest.
  edges_.erase(std::unique(edges_.begin(), edges_.end(),
                           [](const WeightedEdge& a, const WeightedEdge& b) {
                             return a.from == b.from && a.to == b.to;
                           }),
               edges_.end());

  out_offsets_.assign(n_ + 1, 0);
  for (const WeightedEdge& e : edges_) ++out_offsets_[e.from + 1];
  for (std::size_t v = 0; v < n_; ++v) out_offsets_[v + 1] += out_offsets_[v];
}

std::span<const WeightedEdge> WeightedDigraph::out(Vertex v) const noexcept {
  return {edges_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

Digraph WeightedDigraph::topology() const {
  std::vector<Edge> plain;
  plain.reserve(edges_.size());
  for (const WeightedEdge& e : edges_) plain.push_back({e.from, e.to});
  return Digraph(n_, std::move(plain));
}

// ---------------------------------------------------------------------------
// Ordering and reachability

std::optional<std::vector<Vertex>> topological_order(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indegree(n);
  for (Vertex v = 0; v < n; ++v) indegree[v] = g.in(v).size();

  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);

  std::vector<Vertex> order;
  order.reserve(n);
  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : g.out(v))
      if (--indegree[w] == 0) ready.push(w);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

bool is_acyclic(const Digraph& g) { return topological_order(g).has_value(); }

namespace {

BitMatrix adjacency_with_identity(const Digraph& g) {
  BitMatrix m = BitMatrix::identity(g.vertex_count());
  for (const Edge& e : g.edges()) m.set(e.from, e.to);
  return m;
}

}  // namespace

ReachabilityMatrix transitive_closure(const Digraph& g) {
  BitMatrix m = adjacency_with_identity(g);
  // After k squarings m covers paths of length <= 2^k; stop at the fixpoint.
  for (std::size_t reach = 1; reach < g.vertex_count(); reach *= 2) {
    BitMatrix squared = m.multiply(m);
    if (squared == m) break;
    m = std::move(squared);
  }
  return m;
}

ReachabilityMatrix bounded_reachability(const Digraph& g, std::size_t r) {
  BitMatrix result = BitMatrix::identity(g.vertex_count());
  BitMatrix base = adjacency_with_identity(g);
  bool first = true;
  while (r > 0) {
    if (r & 1U) {
      result = first ? base : result.multiply(base);
      first = false;
    }
    r >>= 1;
    if (r > 0) base = base.multiply(base);
  }
  return result;
}

Digraph closure_graph(const ReachabilityMatrix& closure) {
  const std::size_t n = closure.size();
  std::vector<Edge> edges;
  edges.reserve(closure.count());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && closure.test(u, v)) edges.push_back({u, v});
  return Digraph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Condensation

Condensation condense(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> found;  // reverse topological order
  std::size_t next_index = 0;

  struct Frame {
    Vertex v;
    std::size_t child;
  };
  std::vector<Frame> call;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!call.empty()) {
      Frame& frame = call.back();
      const Vertex v = frame.v;
      auto succ = g.out(v);
      if (frame.child < succ.size()) {
        const Vertex w = succ[frame.child++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      if (lowlink[v] == index[v]) {
        std::vector<Vertex> component;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        found.push_back(std::move(component));
      }
      call.pop_back();
      if (!call.empty()) {
        const Vertex parent = call.back().v;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
    }
  }

  Condensation c;
  c.members.assign(found.rbegin(), found.rend());
  c.component_of.assign(n, 0);
  for (Vertex id = 0; id < c.members.size(); ++id)
    for (Vertex v : c.members[id]) c.component_of[v] = id;

  std::vector<Edge> dag_edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = c.component_of[e.from];
    const Vertex b = c.component_of[e.to];
    if (a != b) dag_edges.push_back({a, b});
  }
  c.dag = Digraph(c.members.size(), std::move(dag_edges));
  return c;
}

std::vector<Edge> lift_shortcuts(const Digraph& g, const Condensation& c,
                                 std::span<const Edge> h_plus) {
  if (c.component_of.size() != g.vertex_count()) {
    throw std::invalid_argument("lift_shortcuts: condensation does not match the graph");
  }
  std::vector<Edge> lifted;
  if (!h_plus.empty()) {
    const ReachabilityMatrix dag_closure = transitive_closure(c.dag);
    for (const Edge& e : h_plus) {
      if (e.from >= c.dag.vertex_count() || e.to >= c.dag.vertex_count() || e.from == e.to ||
          !dag_closure.test(e.from, e.to)) {
        throw std::invalid_argument("lift_shortcuts: (" + std::to_string(e.from) + "," +
                                    std::to_string(e.to) +
                                    ") is not a closure pair of the condensation");
      }
      lifted.push_back({c.representative(e.from), c.representative(e.to)});
    }
  }
  for (const auto& component : c.members) {
    const Vertex rep = component.front();
    for (std::size_t i = 1; i < component.size(); ++i) {
      lifted.push_back({component[i], rep});
      lifted.push_back({rep, component[i]});
    }
  }
  std::sort(lifted.begin(), lifted.end());
  lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
  return lifted;
}

// ---------------------------------------------------------------------------
// Distances

DistanceMatrix apsp(const WeightedDigraph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix dist(n);
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (Vertex s = 0; s < n; ++s) {
    auto row = dist.row(s);
    row[s] = 0;
    heap.push({0, s});
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      heap.pop();
      if (d != row[v]) continue;
      for (const WeightedEdge& e : g.out(v)) {
        const Weight candidate = saturating_add(d, e.weight);
        if (candidate < row[e.to]) {
          row[e.to] = candidate;
          heap.push({candidate, e.to});
        }
      }
    }
  }
  return dist;
}

DistanceMatrix hop_distances(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix dist(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = dist.row(s);
    row[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.out(v)) {
        if (row[w] == kInfinity) {
          row[w] = row[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

DistanceMatrix hop_limited_dist(const WeightedDigraph& g, std::size_t beta) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix dist(n);
  std::vector<Weight> next(n);
  for (Vertex s = 0; s < n; ++s) {
    auto current = dist.row(s);
    current[s] = 0;
    for (std::size_t round = 0; round < beta; ++round) {
      std::copy(current.begin(), current.end(), next.begin());
      bool changed = false;
      for (const WeightedEdge& e : g.edges()) {
        if (current[e.from] == kInfinity) continue;
        const Weight candidate = saturating_add(current[e.from], e.weight);
        if (candidate < next[e.to]) {
          next[e.to] = candidate;
          changed = true;
        }
      }
      if (!changed) break;  // fixpoint: further rounds cannot improve
      std::copy(next.begin(), next.end(), current.begin());
    }
  }
  return dist;
}

WeightedDigraph weighted_closure(const DistanceMatrix& dist) {
  const std::size_t n = dist.size();
  std::vector<WeightedEdge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && dist.at(u, v) != kInfinity) edges.push_back({u, v, dist.at(u, v)});
  return WeightedDigraph(n, std::move(edges));
}

WeightedDigraph weighted_closure(const WeightedDigraph& g) { return weighted_closure(apsp(g)); }

}  // namespace sforge
