#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "shortcut_forge/bench.hpp"
#include "shortcut_forge/chain_decomp.hpp"
#include "shortcut_forge/edge_io.hpp"
#include "shortcut_forge/generators.hpp"
#include "shortcut_forge/hopset_algos.hpp"
#include "shortcut_forge/oracles.hpp"
#include "shortcut_forge/shortcut_algos.hpp"

#ifndef SFORGE_VERSION
#define SFORGE_VERSION "0.0.0"
#endif

namespace {

using namespace sforge;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

/// Bad input files, impossible parameter combinations and the like. Reported
/// with the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << body;
  if (!out) throw UsageError("failed writing " + path);
}

void report_load(const LoadReport& report, const std::string& out_path) {
  if (report.self_loops_dropped || report.duplicates_dropped) {
    std::cerr << "dropped " << report.self_loops_dropped << " self-loops and "
              << report.duplicates_dropped << " duplicate edges\n";
  }
  if (!report.ids.identity()) {
    std::ostringstream map;
    write_id_map(map, report.ids);
    write_file(out_path + ".idmap", map.str());
    std::cerr << "vertex ids re-indexed; map written to " << out_path << ".idmap\n";
  }
}

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<double> density;
  Weight w = 1;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  const auto family = parse_family(a.family);
  if (!family) throw UsageError("unknown family " + a.family);
  GenSpec spec{*family, a.n, 0.0, a.w, a.seed};
  if (a.p) spec.p = *a.p;
  if (a.density) spec.p = probability_for_density(*family, a.n, *a.density);

  std::ostringstream body;
  GeneratedGraph g = generate(spec);
  if (a.k) {
    if (*family == Family::weighted_random) throw UsageError("--k applies to unweighted families");
    write_graph(body, subdivide(std::get<Digraph>(g), *a.k).graph);
  } else {
    std::visit([&](const auto& graph) { write_graph(body, graph); }, g);
  }
  write_file(a.out, body.str());
  return kOk;
}

struct ShortcutArgs {
  std::string input;
  std::size_t diameter = 0;
  double c = 3.0;
  std::uint64_t seed = 0;
  std::string out;
  std::string mode = "auto";
};

int run_shortcut(const ShortcutArgs& a) {
  auto in = open_input(a.input);
  const LoadedGraph loaded = read_graph(in);
  const Digraph& g = loaded.graph;
  const ShortcutParams params{a.diameter, a.c, a.seed};

  std::vector<TaggedEdge> tagged;
  if (a.mode == "folklore") {
    const ShortcutSet h = folklore(g, params);
    tagged.assign(h.tagged().begin(), h.tagged().end());
  } else if (a.mode == "tcspanner") {
    tagged = tc_spanner(g, a.diameter, a.c, a.seed).tagged();
  } else {
    const ShortcutMode mode = a.mode == "small"   ? ShortcutMode::small
                              : a.mode == "large" ? ShortcutMode::large
                                                  : ShortcutMode::automatic;
    const ShortcutSet h = build_shortcuts(g, params, mode);
    tagged.assign(h.tagged().begin(), h.tagged().end());
  }
  std::ostringstream body;
  write_shortcuts(body, g.vertex_count(), tagged, loaded.report.ids);
  write_file(a.out, body.str());
  report_load(loaded.report, a.out);
  std::cout << "wrote " << tagged.size() << " edges to " << a.out << '\n';
  return kOk;
}

struct HopsetArgs {
  std::string input;
  std::size_t beta = 12;
  std::string eps = "1/4";
  double c = 3.0;
  std::uint64_t seed = 0;
  std::string out;
  std::string mode = "auto";
};

int run_hopset(const HopsetArgs& a) {
  auto in = open_input(a.input);
  const LoadedWeightedGraph loaded = read_weighted_graph(in);
  const HopsetParams params{a.beta, Rational::parse(a.eps), a.c, a.seed};
  const HopsetEdges h = a.mode == "small"   ? hopset_small_hop(loaded.graph, params)
                        : a.mode == "large" ? hopset_large_hop(loaded.graph, params)
                                            : build_hopset(loaded.graph, params);
  std::ostringstream body;
  write_hopset(body, loaded.graph.vertex_count(), h.tagged(), loaded.report.ids);
  write_file(a.out, body.str());
  report_load(loaded.report, a.out);
  std::cout << "wrote " << h.size() << " edges to " << a.out << '\n';
  return kOk;
}

struct VerifyArgs {
  std::string graph;
  std::string edges;
  std::string mode;
  std::optional<std::size_t> diameter;
  std::optional<std::size_t> beta;
  std::string eps = "1/4";
  bool json = false;
};

void print_text(const VerificationReport& report) {
  std::cout << report.instance << '\n';
  for (const Check& c : report.checks) {
    const char* status = c.status == CheckStatus::pass   ? "pass"
                         : c.status == CheckStatus::fail ? "FAIL"
                                                         : "skipped";
    std::cout << "  " << c.name << ": " << status;
    if (!c.witness.empty()) std::cout << " (" << c.witness << ')';
    std::cout << '\n';
  }
  if (report.achieved_diameter) std::cout << "  achieved diameter: " << *report.achieved_diameter << '\n';
  if (report.achieved_hops) std::cout << "  achieved hops: " << *report.achieved_hops << '\n';
  if (report.achieved_stretch) std::cout << "  achieved stretch: " << *report.achieved_stretch << '\n';
}

int run_verify(const VerifyArgs& a) {
  VerificationReport report;
  if (a.mode == "shortcut") {
    if (!a.diameter) throw UsageError("--mode shortcut needs --diameter");
    auto gin = open_input(a.graph);
    const LoadedGraph loaded = read_graph(gin);
    auto hin = open_input(a.edges);
    const auto h = read_edge_set(hin, loaded.graph.vertex_count(), loaded.report.ids);
    report = verify_shortcut(loaded.graph, h, *a.diameter);
  } else {
    if (!a.beta) throw UsageError("--mode hopset needs --beta");
    auto gin = open_input(a.graph);
    const LoadedWeightedGraph loaded = read_weighted_graph(gin);
    auto hin = open_input(a.edges);
    const auto h = read_weighted_edge_set(hin, loaded.graph.vertex_count(), loaded.report.ids);
    report = verify_hopset(loaded.graph, h, *a.beta, Rational::parse(a.eps));
  }
  if (a.json) {
    std::cout << report.to_json() << '\n';
  } else {
    print_text(report);
  }
  return report.passed() ? kOk : kVerificationFailed;
}

struct DecompArgs {
  std::string input;
  std::size_t ell = 0;
};

int run_decomp(const DecompArgs& a) {
  auto in = open_input(a.input);
  const LoadedGraph loaded = read_graph(in);
  const ChainDecomposition d = decompose(loaded.graph, a.ell);
  const IdMap& ids = loaded.report.ids;
  auto print = [&](const char* label, const std::vector<Vertex>& group) {
    std::cout << label;
    for (Vertex v : group) std::cout << ' ' << ids.original(v);
    std::cout << '\n';
  };
  for (const auto& c : d.chains) print("chain", c);
  for (const auto& s : d.antichains) print("antichain", s);
  return kOk;
}

struct BenchArgs {
  std::string config;
  std::string out;
  std::optional<std::size_t> threads;
  bool no_timing = false;
};

int run_bench_command(const BenchArgs& a) {
  auto in = open_input(a.config);
  BenchConfig config = parse_bench_config(in);
  if (a.no_timing) config.timing = false;
  std::size_t threads = default_thread_count();
  if (a.threads) threads = std::min(threads, std::max<std::size_t>(1, *a.threads));
  const std::vector<BenchRow> rows = run_bench(config, threads);

  std::ostringstream csv;
  write_csv_header(csv);
  bool all_ok = true;
  for (const BenchRow& row : rows) {
    write_csv_row(csv, row);
    all_ok = all_ok && row.verified;
  }
  if (a.out.empty()) {
    std::cout << csv.str();
  } else {
    write_file(a.out, csv.str());
  }
  return all_ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortcut sets and hopsets for directed graphs"};
  app.set_version_flag("--version", std::string("shortcut_forge ") + SFORGE_VERSION);
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph instance");
  gen_cmd->add_option("--family", gen.family, "random_dag|random_digraph|path|layered|grid_dag|weighted_random")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  auto* p_opt = gen_cmd->add_option("--p", gen.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--density", gen.density, "Expected edges per vertex")
      ->check(CLI::NonNegativeNumber)
      ->excludes(p_opt);
  gen_cmd->add_option("--W", gen.w, "Weight bound (weighted_random)")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--k", gen.k, "Subdivide every vertex into a path of k edges")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output edge list")->required();

  ShortcutArgs sc;
  auto* sc_cmd = app.add_subcommand("shortcut", "Build a shortcut set");
  sc_cmd->add_option("--input", sc.input, "Input edge list")->required();
  sc_cmd->add_option("--diameter", sc.diameter, "Target diameter D (k for tcspanner)")->required();
  sc_cmd->add_option("--const", sc.c, "Sampling constant c")->check(CLI::PositiveNumber);
  sc_cmd->add_option("--seed", sc.seed, "Random seed")->required();
  sc_cmd->add_option("--out", sc.out, "Output edge list")->required();
  sc_cmd->add_option("--mode", sc.mode, "auto|small|large|folklore|tcspanner")
      ->check(CLI::IsMember({"auto", "small", "large", "folklore", "tcspanner"}));

  HopsetArgs hs;
  auto* hs_cmd = app.add_subcommand("hopset", "Build a (beta, eps)-hopset");
  hs_cmd->add_option("--input", hs.input, "Weighted input edge list")->required();
  hs_cmd->add_option("--beta", hs.beta, "Hopbound beta")->required();
  hs_cmd->add_option("--eps", hs.eps, "Stretch as p/q");
  hs_cmd->add_option("--const", hs.c, "Sampling constant c")->check(CLI::PositiveNumber);
  hs_cmd->add_option("--seed", hs.seed, "Random seed")->required();
  hs_cmd->add_option("--out", hs.out, "Output edge list")->required();
  hs_cmd->add_option("--mode", hs.mode, "auto|small|large")
      ->check(CLI::IsMember({"auto", "small", "large"}));

  VerifyArgs vf;
  auto* vf_cmd = app.add_subcommand("verify", "Check an edge set against brute-force oracles");
  vf_cmd->add_option("--graph", vf.graph, "Input graph")->required();
  vf_cmd->add_option("--edges", vf.edges, "Edge set H")->required();
  vf_cmd->add_option("--mode", vf.mode, "shortcut|hopset")
      ->required()
      ->check(CLI::IsMember({"shortcut", "hopset"}));
  vf_cmd->add_option("--diameter", vf.diameter, "Diameter bound (shortcut mode)");
  vf_cmd->add_option("--beta", vf.beta, "Hopbound (hopset mode)");
  vf_cmd->add_option("--eps", vf.eps, "Stretch as p/q (hopset mode)");
  vf_cmd->add_flag("--json", vf.json, "Print the report as JSON");

  DecompArgs dc;
  auto* dc_cmd = app.add_subcommand("decomp", "Chain/antichain decomposition of a DAG");
  dc_cmd->add_option("--input", dc.input, "Input edge list")->required();
  dc_cmd->add_option("--ell", dc.ell, "Chain budget")->required();

  BenchArgs bn;
  auto* bn_cmd = app.add_subcommand("bench", "Run a benchmark grid and emit CSV");
  bn_cmd->add_option("--config", bn.config, "key=value grid file")->required();
  bn_cmd->add_option("--out", bn.out, "CSV output (stdout when omitted)");
  bn_cmd->add_option("--threads", bn.threads, "Worker cap")->check(CLI::PositiveNumber);
  bn_cmd->add_flag("--no-timing", bn.no_timing, "Leave wall_ms empty for reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*sc_cmd) return run_shortcut(sc);
    if (*hs_cmd) return run_hopset(hs);
    if (*vf_cmd) return run_verify(vf);
    if (*dc_cmd) return run_decomp(dc);
    if (*bn_cmd) return run_bench_command(bn);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
