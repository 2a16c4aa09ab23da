// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "shortcut_forge/chain_decomp.hpp"
#include "shortcut_forge/generators.hpp"
#include "shortcut_forge/hopset_algos.hpp"
#include "shortcut_forge/line_shortcut.hpp"
#include "shortcut_forge/oracles.hpp"
#include "shortcut_forge/rng.hpp"
#include "shortcut_forge/shortcut_algos.hpp"

#ifndef SFORGE_CLI_PATH
#error "SFORGE_CLI_PATH must name the command-line binary"
#endif

using namespace sforge;

namespace {

// Pinned tolerances.
constexpr double kSoundnessSeconds = 30.0;
constexpr double kSmallDiamSeconds = 60.0;
constexpr std::size_t kSeeds = 100;
constexpr std::size_t kWhpSuccesses = 95;
constexpr std::size_t kLargeDFactor = 4;
constexpr std::size_t kLargeHopFactor = 4;
constexpr double kStretchLimit = 1.25;
constexpr double kCriterionDensity = 4.0;  // expected edges per vertex where unspecified

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<std::size_t> values) {
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size();
  if (k == 0) return 0.0;
  return k % 2 ? static_cast<double>(values[k / 2])
               : (static_cast<double>(values[k / 2 - 1]) + static_cast<double>(values[k / 2])) / 2.0;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// ---------------------------------------------------------------------------

Outcome soundness() {
  const auto start = Clock::now();
  std::size_t checked = 0;
  std::string failure;
  auto note = [&](const std::string& what, const VerificationReport& r) {
    ++checked;
    if (failure.empty()) {
      for (const Check& c : r.checks) {
        if (c.status == CheckStatus::fail && c.name != "diameter" && c.name != "upper_side") {
          failure = what + ": " + c.name + " " + c.witness;
          break;
        }
      }
    }
  };

  for (std::size_t n : {64, 128, 256, 512}) {
    for (Family f : {Family::random_dag, Family::random_digraph}) {
      const double p = probability_for_density(f, n, f == Family::random_dag ? 4.0 : 1.2);
      const Digraph g = generate_digraph({f, n, p, 1, 7 + n});
      const std::string label = std::string(to_string(f)) + " n=" + std::to_string(n);
      const std::size_t small_d = std::max<std::size_t>(3, cube_root_ceil(n) / 2 + 1);
      const std::size_t large_d = 2 * cube_root_ceil(n);
      note(label + " small", verify_shortcut(g, build_shortcuts(g, {small_d, 3.0, 1}).edges(), small_d));
      note(label + " large", verify_shortcut(g, build_shortcuts(g, {large_d, 3.0, 2}).edges(), large_d));
      note(label + " folklore", verify_shortcut(g, folklore(g, {small_d, 3.0, 3}).edges(), small_d));
      std::vector<Edge> spanner;
      for (const TaggedEdge& t : tc_spanner(g, 5, 3.0, 4).tagged()) spanner.push_back(t.edge);
      // The spanner replaces g: its closure must be g's closure.
      const Digraph sp(n, spanner);
      const auto reach_g = oracle::reachability(g);
      const auto reach_sp = oracle::reachability(sp);
      ++checked;
      if (reach_g != reach_sp && failure.empty()) failure = label + " tc_spanner closure differs";
    }
  }

  for (std::size_t n : {64, 128, 256}) {
    const WeightedDigraph g = generate_weighted(
        {Family::weighted_random, n, probability_for_density(Family::weighted_random, n, 3.0), 20, 11 + n});
    const auto truth = oracle::bellman_ford_all_pairs(n, g.edges());
    auto exact = [&](const std::string& what, const HopsetEdges& h) {
      const auto edges = h.edges();
      note(what, verify_hopset(g, edges, n, Rational{1, 4}));
      std::vector<WeightedEdge> all(g.edges().begin(), g.edges().end());
      all.insert(all.end(), edges.begin(), edges.end());
      ++checked;
      if (oracle::bellman_ford_all_pairs(n, all) != truth && failure.empty())
        failure = what + ": distances of G U H differ from G";
    };
    const std::string label = "weighted n=" + std::to_string(n);
    exact(label + " small", hopset_small_hop(g, {12, {1, 4}, 3.0, 5}));
    exact(label + " large", hopset_large_hop(g, {std::max<std::size_t>(12, 3 * fourth_root_ceil(n)), {1, 4}, 3.0, 6}));
  }

  const double secs = seconds_since(start);
  Outcome out;
  out.pass = failure.empty() && secs < kSoundnessSeconds;
  std::ostringstream d;
  d << checked << " checks in " << secs << " s";
  if (!failure.empty()) d << "; " << failure;
  out.detail = d.str();
  return out;
}

Outcome path_shortcut_bound() {
  Rng rng(2024);
  std::vector<std::size_t> sizes{1, 2, 1024};
  while (sizes.size() < 50) {
    const std::size_t s = rng.between(1, 1024);
    if (std::find(sizes.begin(), sizes.end(), s) == sizes.end()) sizes.push_back(s);
  }
  std::string failure;
  for (std::size_t len : sizes) {
    std::vector<Vertex> path(len);
    for (Vertex i = 0; i < len; ++i) path[i] = i;
    const PathShortcut ps = shortcut_path(path);
    std::vector<Edge> all = ps.edges;
    for (Vertex i = 0; i + 1 < len; ++i) all.push_back({i, i + 1});
    const std::size_t diam = oracle::diameter(len, all);
    std::size_t log2 = 0;
    while ((std::size_t{1} << log2) < len) ++log2;
    if ((diam > 2 || ps.edges.size() > len * log2) && failure.empty()) {
      failure = "|P|=" + std::to_string(len) + " diameter " + std::to_string(diam) + " |H|=" +
                std::to_string(ps.edges.size());
    }
  }
  return {failure.empty(), std::to_string(sizes.size()) + " sizes" + (failure.empty() ? "" : "; " + failure)};
}

Outcome decomposition_contract() {
  const double probabilities[] = {0.02, 0.05, 0.1, 0.2, 0.5};
  std::size_t ok = 0;
  std::string failure;
  for (std::size_t seed = 0; seed < kSeeds; ++seed) {
    const Digraph g = generate_digraph({Family::random_dag, 64, probabilities[seed % 5], 1, seed});
    const VerificationReport r = check_decomposition(g, decompose(g, 16), 16);
    if (r.passed()) {
      ++ok;
    } else if (failure.empty()) {
      failure = "seed " + std::to_string(seed) + " failed";
    }
  }
  return {ok == kSeeds, std::to_string(ok) + "/" + std::to_string(kSeeds) + (failure.empty() ? "" : "; " + failure)};
}

Outcome small_diameter_rendering() {
  const auto start = Clock::now();
  std::size_t ok = 0;
  std::vector<std::size_t> ours;
  std::vector<std::size_t> baseline;
  for (std::size_t seed = 1; seed <= kSeeds; ++seed) {
    const Digraph g = generate_digraph({Family::random_dag, 216, 0.05, 1, seed});
    const ShortcutParams params{6, 3.0, seed};
    const ShortcutSet h = build_shortcuts(g, params);
    if (verify_shortcut(g, h.edges(), 6).passed()) ++ok;
    ours.push_back(h.size());
    baseline.push_back(folklore(g, params).size());
  }
  const double secs = seconds_since(start);
  const double m_ours = median(ours);
  const double m_base = median(baseline);
  std::ostringstream d;
  d << ok << "/" << kSeeds << " within D=6; median |H| " << m_ours << " vs folklore " << m_base
    << "; " << secs << " s";
  return {ok >= kWhpSuccesses && m_ours < m_base && secs < kSmallDiamSeconds, d.str()};
}

Outcome large_diameter_rendering() {
  // Same edge probability as the small-diameter rendering.
  std::size_t ok = 0;
  std::vector<std::size_t> ours;
  std::vector<std::size_t> baseline;
  std::size_t worst = 0;
  for (std::size_t seed = 1; seed <= kSeeds; ++seed) {
    const Digraph g = generate_digraph({Family::random_dag, 512, 0.05, 1, seed});
    const ShortcutParams params{64, 3.0, seed};
    const ShortcutSet h = build_shortcuts(g, params, ShortcutMode::large);
    const VerificationReport r = verify_shortcut(g, h.edges(), kLargeDFactor * 64);
    if (r.passed()) ++ok;
    worst = std::max(worst, r.achieved_diameter.value_or(0));
    ours.push_back(h.size());
    baseline.push_back(folklore(g, params).size());
  }
  const double m_ours = median(ours);
  const double m_base = median(baseline);
  std::ostringstream d;
  d << ok << "/" << kSeeds << " within 4D=256 (worst " << worst << "); median |H| " << m_ours
    << " vs folklore " << m_base;
  return {ok >= kWhpSuccesses && m_ours <= m_base, d.str()};
}

Outcome nice_collections() {
  Rng sizes(606);
  std::size_t ok = 0;
  std::string failure;
  for (std::size_t i = 0; i < 50; ++i) {
    const std::size_t n = sizes.between(8, 60);
    const Weight w = sizes.between(1, 20);
    const double p = probability_for_density(Family::weighted_random, n, 2.5);
    const WeightedDigraph g = generate_weighted({Family::weighted_random, n, p, w, 1000 + i});
    const VerificationReport r = verify_nice(g, nice_collection(g, 12));
    bool all_ran = true;
    for (const Check& c : r.checks) all_ran = all_ran && c.status == CheckStatus::pass;
    if (all_ran) {
      ++ok;
    } else if (failure.empty()) {
      failure = "graph " + std::to_string(i) + " (n=" + std::to_string(n) + ")";
    }
  }
  return {ok == 50, std::to_string(ok) + "/50" + (failure.empty() ? "" : "; " + failure)};
}

Outcome small_hop_rendering() {
  std::size_t sandwich = 0;
  std::size_t lower = 0;
  const double p = probability_for_density(Family::weighted_random, 120, kCriterionDensity);
  for (std::size_t seed = 1; seed <= kSeeds; ++seed) {
    const WeightedDigraph g = generate_weighted({Family::weighted_random, 120, p, 50, seed});
    const HopsetEdges h = hopset_small_hop(g, {12, {1, 4}, 3.0, seed});
    const VerificationReport r = verify_hopset(g, h.edges(), 12, {1, 4});
    if (r.passed()) ++sandwich;
    if (r.find("lower_side")->status == CheckStatus::pass &&
        r.find("exact_weights")->status == CheckStatus::pass)
      ++lower;
  }
  std::ostringstream d;
  d << "sandwich " << sandwich << "/" << kSeeds << ", lower side " << lower << "/" << kSeeds;
  return {sandwich >= kWhpSuccesses && lower == kSeeds, d.str()};
}

Outcome large_hop_rendering() {
  std::size_t ok = 0;
  std::ostringstream log;
  const double p = probability_for_density(Family::weighted_random, 400, kCriterionDensity);
  for (std::size_t seed = 1; seed <= kSeeds; ++seed) {
    const WeightedDigraph g = generate_weighted({Family::weighted_random, 400, p, 20, seed});
    const HopsetEdges h = hopset_large_hop(g, {80, {1, 4}, 3.0, seed});
    const VerificationReport r = verify_hopset(g, h.edges(), kLargeHopFactor * 80, {1, 4});
    const bool good = r.passed() && r.achieved_stretch.value_or(INFINITY) <= kStretchLimit;
    if (good) ++ok;
    const double c = r.achieved_hops ? static_cast<double>(*r.achieved_hops) / 80.0 : INFINITY;
    log << (seed > 1 ? " " : "") << std::setprecision(3) << c;
  }
  std::cout << "    C per seed (achieved hops / beta): " << log.str() << '\n';
  return {ok >= kWhpSuccesses, std::to_string(ok) + "/" + std::to_string(kSeeds) + " with stretch <= 1.25 at 4*beta hops"};
}

Outcome subdivision_transform() {
  std::size_t ok = 0;
  std::string failure;
  for (std::size_t i = 0; i < 20; ++i) {
    const std::size_t n = 16 + 2 * i;
    const Family f = i % 2 ? Family::random_digraph : Family::random_dag;
    const Digraph g = generate_digraph({f, n, probability_for_density(f, n, 1.5), 1, 300 + i});
    const auto reach = oracle::reachability(g);
    bool good = true;
    for (std::size_t k : {1, 2, 5}) {
      const Subdivision s = subdivide(g, k);
      good = good && s.graph.vertex_count() == n * (k + 1);
      const auto reach_k = oracle::reachability(s.graph);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
          good = good && (reach[u][v] != 0) == (reach_k[s.head[u]][s.tail[v]] != 0);
    }
    if (good) {
      ++ok;
    } else if (failure.empty()) {
      failure = "graph " + std::to_string(i);
    }
  }

  // Path instances: vertex-disjoint directed paths of length D, subdivided.
  bool lb_ok = true;
  std::string lb_detail;
  for (std::size_t d : {3, 6, 10}) {
    const std::size_t count = 4;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> paths;
    for (std::size_t j = 0; j < count; ++j) {
      std::vector<Vertex> p;
      for (std::size_t t = 0; t <= d; ++t) p.push_back(static_cast<Vertex>(j * (d + 1) + t));
      for (std::size_t t = 0; t < d; ++t) edges.push_back({p[t], p[t + 1]});
      paths.push_back(p);
    }
    const Digraph g(count * (d + 1), edges);
    for (std::size_t k : {1, 2, 5}) {
      const Subdivision s = subdivide(g, k);
      std::vector<std::vector<Vertex>> mapped;
      for (const auto& p : paths) mapped.push_back(s.map_path(p));
      const std::size_t length = (k + 1) * (d + 1) - 1;
      const VerificationReport r = check_lb_properties(s.graph, mapped, {1, length});
      if (!r.passed() || length < k * d) {
        lb_ok = false;
        if (lb_detail.empty()) lb_detail = "D=" + std::to_string(d) + " k=" + std::to_string(k);
      }
    }
  }
  std::string detail = std::to_string(ok) + "/20 graphs";
  if (!failure.empty()) detail += "; " + failure;
  detail += lb_ok ? "; path instances accepted" : "; path instance rejected at " + lb_detail;
  return {ok == 20 && lb_ok, detail};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / ("sforge_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  const std::string cli = SFORGE_CLI_PATH;
  std::string failure;
  auto run = [&](const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };

  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    std::vector<std::string> outputs[2];
    for (int pass = 0; pass < 2; ++pass) {
      const fs::path dir = root / ("run" + std::to_string(pass)) / std::to_string(seed);
      fs::create_directories(dir);
      const std::string s = std::to_string(seed);
      const std::string g = (dir / "g.txt").string();
      const std::string h = (dir / "h.txt").string();
      const std::string w = (dir / "w.txt").string();
      const std::string hw = (dir / "hw.txt").string();
      int rc = run("gen --family random_dag --n 120 --p 0.05 --seed " + s + " --out " + g);
      rc |= run("shortcut --input " + g + " --diameter 4 --seed " + s + " --out " + h);
      rc |= run("verify --graph " + g + " --edges " + h + " --mode shortcut --diameter 4");
      rc |= run("gen --family weighted_random --n 60 --p 0.06 --W 20 --seed " + s + " --out " + w);
      rc |= run("hopset --input " + w + " --beta 12 --eps 1/4 --mode small --seed " + s + " --out " + hw);
      rc |= run("verify --graph " + w + " --edges " + hw + " --mode hopset --beta 12 --eps 1/4");
      if (rc != 0 && failure.empty()) failure = "pipeline failed for seed " + s;
      outputs[pass] = {slurp(g), slurp(h), slurp(w), slurp(hw)};
    }
    if (outputs[0] != outputs[1] && failure.empty()) failure = "outputs differ for seed " + std::to_string(seed);
    if (outputs[0][1].empty() && failure.empty()) failure = "empty output for seed " + std::to_string(seed);
  }
  fs::remove_all(root);
  return {failure.empty(), failure.empty() ? "5 seeds byte-identical across two runs" : failure};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 soundness suite", soundness},
      {"2 path shortcut bound", path_shortcut_bound},
      {"3 decomposition contract", decomposition_contract},
      {"4 small-diameter rendering", small_diameter_rendering},
      {"5 large-diameter rendering", large_diameter_rendering},
      {"6 nice collections", nice_collections},
      {"7 small-hop hopset rendering", small_hop_rendering},
      {"8 large-hop hopset rendering", large_hop_rendering},
      {"9 subdivision transform", subdivision_transform},
      {"10 determinism", determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.name << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
