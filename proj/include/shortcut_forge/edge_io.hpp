#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "shortcut_forge/graph_core.hpp"
#include "shortcut_forge/hopset_algos.hpp"
#include "shortcut_forge/shortcut_algos.hpp"

namespace sforge {

/// Malformed edge-list input. line() is 1-based; 0 when the problem is not
/// tied to one line (for example a missing header).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Dense ids are used internally. When a file names an id >= n, every id is
/// re-indexed in increasing order of its original value and the map is kept.
struct IdMap {
  /// original_of[new id] = id in the file. Empty means the identity.
  std::vector<std::uint64_t> original_of;

  bool identity() const noexcept { return original_of.empty(); }
  std::uint64_t original(Vertex v) const { return identity() ? v : original_of.at(v); }
  /// Dense id of a file id; nullopt when the file id is unknown.
  std::optional<Vertex> dense(std::uint64_t id, std::size_t n) const;
};

struct LoadReport {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
  IdMap ids;
};

struct LoadedGraph {
  Digraph graph;
  LoadReport report;
};

struct LoadedWeightedGraph {
  WeightedDigraph graph;
  LoadReport report;
};

/// Edge-list text: header `n m` or `n m W`, then one `u v` or `u v w` line
/// per edge. `#` starts a comment; blank lines are ignored. A trailing
/// non-numeric token (a provenance tag) is accepted and ignored. The edge count
/// must equal m. Self-loops and duplicates are dropped and counted; for
/// weighted duplicates the smallest weight survives.
LoadedGraph read_graph(std::istream& in);
LoadedWeightedGraph read_weighted_graph(std::istream& in);

/// An edge file H over an already loaded graph: ids are translated through
/// `ids`, and any id the graph does not know is a ParseError.
std::vector<Edge> read_edge_set(std::istream& in, std::size_t n, const IdMap& ids);
std::vector<WeightedEdge> read_weighted_edge_set(std::istream& in, std::size_t n,
                                                 const IdMap& ids);

void write_graph(std::ostream& out, const Digraph& g);
void write_graph(std::ostream& out, const WeightedDigraph& g);

/// `n |H|` header, then `u v provenance` lines in original ids.
void write_shortcuts(std::ostream& out, std::size_t n, std::span<const TaggedEdge> h,
                     const IdMap& ids = {});
/// `n |H| W` header (W = largest weight in H, at least 1), then
/// `u v w provenance` lines in original ids.
void write_hopset(std::ostream& out, std::size_t n, std::span<const TaggedWeightedEdge> h,
                  const IdMap& ids = {});

/// `new original` per line.
void write_id_map(std::ostream& out, const IdMap& ids);

}  // namespace sforge
