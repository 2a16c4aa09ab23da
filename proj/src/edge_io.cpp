#include "shortcut_forge/edge_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string_view>

namespace sforge {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

std::optional<Vertex> IdMap::dense(std::uint64_t id, std::size_t n) const {
  if (identity()) {
    if (id < n) return static_cast<Vertex>(id);
    return std::nullopt;
  }
  const auto it = std::lower_bound(original_of.begin(), original_of.end(), id);
  if (it == original_of.end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - original_of.begin());
}

namespace {

struct RawLine {
  std::size_t line = 0;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::optional<std::uint64_t> weight;
};

struct RawFile {
  std::size_t header_line = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::optional<std::uint64_t> max_weight;
  std::vector<RawLine> edges;
};

std::vector<std::string_view> tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r') ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

std::optional<std::uint64_t> number(std::string_view token) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) return std::nullopt;
  return value;
}

bool is_tag(std::string_view token) {
  return !token.empty() && !number(token) &&
         std::all_of(token.begin(), token.end(), [](char c) {
           return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '-';
         });
}

RawFile read_raw(std::istream& in, bool weighted, bool bounded_weights = true) {
  RawFile file;
  std::string text;
  std::size_t line = 0;
  bool have_header = false;
  while (std::getline(in, text)) {
    ++line;
    std::string_view view(text);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    auto parts = tokens(view);
    if (parts.empty()) continue;

    std::vector<std::uint64_t> values;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (auto v = number(parts[i])) {
        values.push_back(*v);
      } else if (have_header && i + 1 == parts.size() && i >= 2 && is_tag(parts[i])) {
        break;  // trailing provenance tag
      } else {
        throw ParseError(line, "unexpected token '" + std::string(parts[i]) + "'");
      }
    }

    if (!have_header) {
      if (values.size() != (weighted ? 3u : 2u) && !(weighted && values.size() == 2)) {
        throw ParseError(line, weighted ? "header must be 'n m W'" : "header must be 'n m'");
      }
      file.header_line = line;
      file.n = values[0];
      file.m = values[1];
      if (values.size() == 3) file.max_weight = values[2];
      have_header = true;
      continue;
    }
    const std::size_t expected = weighted ? 3 : 2;
    if (values.size() != expected) {
      throw ParseError(line, "expected " + std::to_string(expected) + " numbers per edge, got " +
                                 std::to_string(values.size()));
    }
    RawLine edge{line, values[0], values[1], std::nullopt};
    if (weighted) {
      if (values[2] == 0) throw ParseError(line, "edge weight must be >= 1");
      if (bounded_weights && file.max_weight && values[2] > *file.max_weight) {
        throw ParseError(line, "edge weight " + std::to_string(values[2]) + " exceeds W = " +
                                   std::to_string(*file.max_weight));
      }
      edge.weight = values[2];
    }
    file.edges.push_back(edge);
  }
  if (!have_header) throw ParseError(0, "missing header line");
  if (file.n > kMaxVertices) {
    throw ParseError(file.header_line, "n = " + std::to_string(file.n) +
                                           " exceeds the vertex ceiling " +
                                           std::to_string(kMaxVertices));
  }
  if (file.edges.size() != file.m) {
    throw ParseError(file.header_line, "header announces " + std::to_string(file.m) +
                                           " edges but the file has " +
                                           std::to_string(file.edges.size()));
  }
  return file;
}

IdMap build_id_map(const RawFile& file) {
  IdMap ids;
  const bool dense = std::all_of(file.edges.begin(), file.edges.end(), [&](const RawLine& e) {
    return e.from < file.n && e.to < file.n;
  });
  if (dense) return ids;
  std::set<std::uint64_t> seen;
  for (const RawLine& e : file.edges) {
    seen.insert(e.from);
    seen.insert(e.to);
  }
  if (seen.size() > file.n) {
    throw ParseError(file.header_line, "file names " + std::to_string(seen.size()) +
                                           " distinct vertices but n = " +
                                           std::to_string(file.n));
  }
  ids.original_of.assign(seen.begin(), seen.end());
  return ids;
}

template <typename Visit>
void translate(const RawFile& file, const IdMap& ids, std::size_t n, LoadReport* report,
               Visit&& visit) {
  for (const RawLine& e : file.edges) {
    const auto u = ids.dense(e.from, n);
    const auto v = ids.dense(e.to, n);
    if (!u || !v) {
      throw ParseError(e.line, "unknown vertex " + std::to_string(!u ? e.from : e.to));
    }
    if (*u == *v) {
      if (report) {
        ++report->self_loops_dropped;
        continue;
      }
      throw ParseError(e.line, "self-loop on vertex " + std::to_string(e.from));
    }
    visit(e, *u, *v);
  }
}

}  // namespace

LoadedGraph read_graph(std::istream& in) {
  const RawFile file = read_raw(in, false);
  LoadedGraph out;
  out.report.ids = build_id_map(file);
  const std::size_t n = file.n;
  std::set<Edge> edges;
  translate(file, out.report.ids, n, &out.report, [&](const RawLine&, Vertex u, Vertex v) {
    if (!edges.insert({u, v}).second) ++out.report.duplicates_dropped;
  });
  out.graph = Digraph(n, std::vector<Edge>(edges.begin(), edges.end()));
  return out;
}

LoadedWeightedGraph read_weighted_graph(std::istream& in) {
  const RawFile file = read_raw(in, true);
  if (!file.max_weight) throw ParseError(file.header_line, "header must be 'n m W'");
  if (*file.max_weight == 0) throw ParseError(file.header_line, "W must be >= 1");
  LoadedWeightedGraph out;
  out.report.ids = build_id_map(file);
  const std::size_t n = file.n;
  std::map<Edge, Weight> edges;
  translate(file, out.report.ids, n, &out.report, [&](const RawLine& e, Vertex u, Vertex v) {
    auto [it, fresh] = edges.try_emplace({u, v}, *e.weight);
    if (!fresh) {
      ++out.report.duplicates_dropped;
      it->second = std::min(it->second, *e.weight);
    }
  });
  std::vector<WeightedEdge> list;
  for (const auto& [e, w] : edges) list.push_back({e.from, e.to, w});
  out.graph = WeightedDigraph(n, std::move(list), *file.max_weight);
  return out;
}

std::vector<Edge> read_edge_set(std::istream& in, std::size_t n, const IdMap& ids) {
  const RawFile file = read_raw(in, false);
  if (file.n != n) {
    throw ParseError(file.header_line, "edge set is over " + std::to_string(file.n) +
                                           " vertices, graph has " + std::to_string(n));
  }
  std::vector<Edge> out;
  translate(file, ids, n, nullptr,
            [&](const RawLine&, Vertex u, Vertex v) { out.push_back({u, v}); });
  return out;
}

std::vector<WeightedEdge> read_weighted_edge_set(std::istream& in, std::size_t n,
                                                 const IdMap& ids) {
  // Hopset weights are distances and may exceed the graph's W.
  const RawFile file = read_raw(in, true, false);
  if (file.n != n) {
    throw ParseError(file.header_line, "edge set is over " + std::to_string(file.n) +
                                           " vertices, graph has " + std::to_string(n));
  }
  std::vector<WeightedEdge> out;
  translate(file, ids, n, nullptr, [&](const RawLine& e, Vertex u, Vertex v) {
    out.push_back({u, v, *e.weight});
  });
  return out;
}

void write_graph(std::ostream& out, const Digraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.from << ' ' << e.to << '\n';
}

void write_graph(std::ostream& out, const WeightedDigraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.max_weight() << '\n';
  for (const WeightedEdge& e : g.edges()) out << e.from << ' ' << e.to << ' ' << e.weight << '\n';
}

void write_shortcuts(std::ostream& out, std::size_t n, std::span<const TaggedEdge> h,
                     const IdMap& ids) {
  out << n << ' ' << h.size() << '\n';
  for (const TaggedEdge& t : h) {
    out << ids.original(t.edge.from) << ' ' << ids.original(t.edge.to) << ' '
        << to_string(t.provenance) << '\n';
  }
}

void write_hopset(std::ostream& out, std::size_t n, std::span<const TaggedWeightedEdge> h,
                  const IdMap& ids) {
  Weight max_weight = 1;
  for (const TaggedWeightedEdge& t : h) max_weight = std::max(max_weight, t.edge.weight);
  out << n << ' ' << h.size() << ' ' << max_weight << '\n';
  for (const TaggedWeightedEdge& t : h) {
    out << ids.original(t.edge.from) << ' ' << ids.original(t.edge.to) << ' ' << t.edge.weight
        << ' ' << to_string(t.provenance) << '\n';
  }
}

void write_id_map(std::ostream& out, const IdMap& ids) {
  out << "# dense original\n";
  for (std::size_t v = 0; v < ids.original_of.size(); ++v)
    out << v << ' ' << ids.original_of[v] << '\n';
}

}  // namespace sforge
