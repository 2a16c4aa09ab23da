#include "shortcut_forge/bench.hpp"

#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "shortcut_forge/oracles.hpp"
#include "shortcut_forge/rng.hpp"
#include "shortcut_forge/shortcut_algos.hpp"

namespace sforge {

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : std::runtime_error("config line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 5> kAlgorithmNames{{
    {Algorithm::folklore, "folklore"},
    {Algorithm::small_diam, "small_diam"},
    {Algorithm::large_d, "large_d"},
    {Algorithm::hopset_small, "hopset_small"},
    {Algorithm::hopset_large, "hopset_large"},
}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (start <= value.size()) {
    const std::size_t comma = value.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? value.size() : comma;
    items.push_back(trim(value.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

template <typename T>
T parse_unsigned(std::string_view text, std::size_t line, std::string_view key) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw ConfigError(line, "bad value '" + std::string(text) + "' for " + std::string(key));
  return value;
}

double parse_double(std::string_view text, std::size_t line, std::string_view key) {
  // from_chars for double is missing from older standard libraries.
  const std::string copy(text);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size() || !std::isfinite(value))
    throw ConfigError(line, "bad value '" + copy + "' for " + std::string(key));
  return value;
}

std::string format_double(double value) {
  std::ostringstream out;
  out << std::setprecision(6) << value;
  return out.str();
}

std::string provenance_counts(const ShortcutSet& h, Algorithm a) {
  std::vector<Provenance> tags;
  if (a == Algorithm::folklore) {
    tags = {Provenance::baseline};
  } else {
    tags = {Provenance::path_shortcut, Provenance::sampled_pair, Provenance::lifted};
  }
  std::string out;
  for (Provenance p : tags) {
    if (!out.empty()) out += ';';
    out += std::string(to_string(p)) + "=" + std::to_string(h.count(p));
  }
  return out;
}

std::string provenance_counts(const HopsetEdges& h) {
  std::string out;
  for (HopsetProvenance p : {HopsetProvenance::induced_closure, HopsetProvenance::geometric_ladder,
                             HopsetProvenance::recursive}) {
    if (!out.empty()) out += ';';
    out += std::string(to_string(p)) + "=" + std::to_string(h.count(p));
  }
  return out;
}

}  // namespace

std::string_view to_string(Algorithm a) {
  for (const auto& [algorithm, name] : kAlgorithmNames)
    if (algorithm == a) return name;
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
  for (const auto& [algorithm, name] : kAlgorithmNames)
    if (name == text) return algorithm;
  return std::nullopt;
}

bool is_hopset(Algorithm a) { return a == Algorithm::hopset_small || a == Algorithm::hopset_large; }

BenchConfig parse_bench_config(std::istream& in) {
  BenchConfig config;
  std::set<std::string> seen;
  std::string text;
  std::size_t line = 0;
  bool default_w = true;
  bool default_c = true;
  while (std::getline(in, text)) {
    ++line;
    std::string_view view(text);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line, "expected key = value");
    const std::string key(trim(view.substr(0, eq)));
    const std::string_view value = trim(view.substr(eq + 1));
    if (value.empty()) throw ConfigError(line, "empty value for " + key);
    if (!seen.insert(key == "algorithm" ? "algorithms" : key).second)
      throw ConfigError(line, "duplicate key " + key);
    const auto items = split_list(value);
    for (std::string_view item : items)
      if (item.empty()) throw ConfigError(line, "empty list item for " + key);

    if (key == "algorithms" || key == "algorithm") {
      for (auto item : items) {
        const auto a = parse_algorithm(item);
        if (!a) throw ConfigError(line, "unknown algorithm '" + std::string(item) + "'");
        config.algorithms.push_back(*a);
      }
    } else if (key == "family") {
      for (auto item : items) {
        const auto f = parse_family(item);
        if (!f) throw ConfigError(line, "unknown family '" + std::string(item) + "'");
        config.families.push_back(*f);
      }
    } else if (key == "n") {
      for (auto item : items) {
        const auto n = parse_unsigned<std::size_t>(item, line, key);
        if (n > kMaxVertices) throw ConfigError(line, "n exceeds " + std::to_string(kMaxVertices));
        config.sizes.push_back(n);
      }
    } else if (key == "p") {
      if (!config.densities.empty()) throw ConfigError(line, "p and density are mutually exclusive");
      for (auto item : items) {
        const double p = parse_double(item, line, key);
        if (p < 0.0 || p > 1.0) throw ConfigError(line, "p must lie in [0, 1]");
        config.probabilities.push_back(p);
      }
    } else if (key == "density") {
      if (!config.probabilities.empty()) throw ConfigError(line, "p and density are mutually exclusive");
      for (auto item : items) {
        const double d = parse_double(item, line, key);
        if (d < 0.0) throw ConfigError(line, "density must be non-negative");
        config.densities.push_back(d);
      }
    } else if (key == "W") {
      if (default_w) config.max_weights.clear();
      default_w = false;
      for (auto item : items) {
        const auto w = parse_unsigned<Weight>(item, line, key);
        if (w == 0) throw ConfigError(line, "W must be >= 1");
        config.max_weights.push_back(w);
      }
    } else if (key == "D") {
      for (auto item : items) config.diameters.push_back(parse_unsigned<std::size_t>(item, line, key));
    } else if (key == "beta") {
      for (auto item : items) config.betas.push_back(parse_unsigned<std::size_t>(item, line, key));
    } else if (key == "eps") {
      for (auto item : items) {
        try {
          config.epsilons.push_back(Rational::parse(item));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(line, e.what());
        }
      }
    } else if (key == "c") {
      if (default_c) config.constants.clear();
      default_c = false;
      for (auto item : items) {
        const double c = parse_double(item, line, key);
        if (c <= 0.0) throw ConfigError(line, "c must be positive");
        config.constants.push_back(c);
      }
    } else if (key == "seeds" || key == "seed") {
      for (auto item : items) {
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
          config.seeds.push_back(parse_unsigned<std::uint64_t>(item, line, key));
          continue;
        }
        const auto lo = parse_unsigned<std::uint64_t>(trim(item.substr(0, dots)), line, key);
        const auto hi = parse_unsigned<std::uint64_t>(trim(item.substr(dots + 2)), line, key);
        if (hi < lo) throw ConfigError(line, "empty seed range");
        if (hi - lo >= 1000000) throw ConfigError(line, "seed range too long");
        for (std::uint64_t s = lo; s <= hi; ++s) config.seeds.push_back(s);
      }
    } else if (key == "timing") {
      if (value == "on") {
        config.timing = true;
      } else if (value == "off") {
        config.timing = false;
      } else {
        throw ConfigError(line, "timing must be on or off");
      }
    } else {
      throw ConfigError(line, "unknown key '" + key + "'");
    }
  }

  const std::size_t last = line;
  if (config.algorithms.empty()) throw ConfigError(last, "missing key algorithms");
  if (config.families.empty()) throw ConfigError(last, "missing key family");
  if (config.sizes.empty()) throw ConfigError(last, "missing key n");
  if (config.seeds.empty()) throw ConfigError(last, "missing key seeds");
  if (config.probabilities.empty() && config.densities.empty()) config.probabilities.push_back(0.0);
  const bool any_shortcut = std::any_of(config.algorithms.begin(), config.algorithms.end(),
                                        [](Algorithm a) { return !is_hopset(a); });
  const bool any_hopset = std::any_of(config.algorithms.begin(), config.algorithms.end(), is_hopset);
  if (any_shortcut && config.diameters.empty()) throw ConfigError(last, "missing key D");
  if (any_hopset && config.betas.empty()) throw ConfigError(last, "missing key beta");
  if (any_hopset && config.epsilons.empty()) config.epsilons.push_back(Rational{1, 4});
  return config;
}

std::vector<BenchRow> expand_grid(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  const bool by_density = !config.densities.empty();
  const auto& edge_params = by_density ? config.densities : config.probabilities;
  for (Algorithm a : config.algorithms) {
    for (Family f : config.families) {
      for (std::size_t n : config.sizes) {
        for (double q : edge_params) {
          const double p = by_density ? probability_for_density(f, n, q) : q;
          for (Weight w : config.max_weights) {
            auto emit = [&](std::size_t d, std::size_t beta, Rational eps) {
              for (double c : config.constants) {
                for (std::uint64_t seed : config.seeds) {
                  BenchRow row;
                  row.algorithm = a;
                  row.family = f;
                  row.n = n;
                  row.p = p;
                  row.max_weight = w;
                  row.diameter = d;
                  row.beta = beta;
                  row.eps = eps;
                  row.c = c;
                  row.seed = seed;
                  rows.push_back(std::move(row));
                }
              }
            };
            if (is_hopset(a)) {
              for (std::size_t beta : config.betas)
                for (Rational eps : config.epsilons) emit(0, beta, eps);
            } else {
              for (std::size_t d : config.diameters) emit(d, 0, Rational{1, 4});
            }
          }
        }
      }
    }
  }
  return rows;
}

std::size_t verification_budget(const BenchRow& row) {
  switch (row.algorithm) {
    case Algorithm::large_d:
      return kLargeBudgetFactor * row.diameter;
    case Algorithm::hopset_large:
      return kLargeBudgetFactor * row.beta;
    case Algorithm::hopset_small:
      return row.beta;
    default:
      return row.diameter;
  }
}

void run_cell(BenchRow& row, bool timing) {
  using Clock = std::chrono::steady_clock;
  try {
    GenSpec spec{row.family, row.n, row.p, row.max_weight, row.seed};
    if (is_hopset(row.algorithm)) {
      WeightedDigraph g;
      if (row.family == Family::weighted_random) {
        g = generate_weighted(spec);
      } else {
        g = with_random_weights(generate_digraph(spec), row.max_weight,
                                Rng(row.seed).fork("bench/weights").seed());
      }
      row.graph_edges = g.edge_count();
      const HopsetParams params{row.beta, row.eps, row.c, row.seed};
      const auto start = Clock::now();
      const HopsetEdges h = row.algorithm == Algorithm::hopset_small ? hopset_small_hop(g, params)
                                                                      : hopset_large_hop(g, params);
      const auto stop = Clock::now();
      if (timing) row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      row.h_size = h.size();
      row.h_by_provenance = provenance_counts(h);
      const auto edges = h.edges();
      const VerificationReport report = verify_hopset(g, edges, verification_budget(row), row.eps);
      row.achieved_hops = report.achieved_hops;
      row.achieved_stretch = report.achieved_stretch;
      row.verified = report.passed();
    } else {
      Digraph g = row.family == Family::weighted_random ? generate_weighted(spec).topology()
                                                        : generate_digraph(spec);
      row.graph_edges = g.edge_count();
      const ShortcutParams params{row.diameter, row.c, row.seed};
      const auto start = Clock::now();
      ShortcutSet h;
      switch (row.algorithm) {
        case Algorithm::folklore:
          h = folklore(g, params);
          break;
        case Algorithm::small_diam:
          h = build_shortcuts(g, params, ShortcutMode::small);
          break;
        default:
          h = build_shortcuts(g, params, ShortcutMode::large);
          break;
      }
      const auto stop = Clock::now();
      if (timing) row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      row.h_size = h.size();
      row.h_by_provenance = provenance_counts(h, row.algorithm);
      const auto edges = h.edges();
      const VerificationReport report = verify_shortcut(g, edges, verification_budget(row));
      row.achieved_diameter = report.achieved_diameter;
      row.verified = report.passed();
    }
  } catch (const std::exception& e) {
    row.error = e.what();
    row.verified = false;
  }
}

std::vector<BenchRow> run_bench(const BenchConfig& config, std::size_t threads) {
  std::vector<BenchRow> rows = expand_grid(config);
  threads = std::max<std::size_t>(1, std::min(threads, rows.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) run_cell(rows[i], config.timing);
  };
  if (threads == 1) {
    worker();
    return rows;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return rows;
}

void write_csv_header(std::ostream& out) {
  out << "algorithm,family,n,p,W,D,beta,eps,c,seed,graph_edges,h_size,h_by_provenance,"
         "achieved_diameter,achieved_hops,achieved_stretch,verified,wall_ms,error\n";
}

void write_csv_row(std::ostream& out, const BenchRow& row) {
  const bool hop = is_hopset(row.algorithm);
  std::string error = row.error;
  for (char& ch : error)
    if (ch == ',' || ch == '\n' || ch == '"') ch = ' ';
  out << to_string(row.algorithm) << ',' << to_string(row.family) << ',' << row.n << ','
      << format_double(row.p) << ',' << row.max_weight << ',';
  out << (hop ? std::string{} : std::to_string(row.diameter)) << ','
      << (hop ? std::to_string(row.beta) : std::string{}) << ','
      << (hop ? row.eps.str() : std::string{}) << ',';
  out << format_double(row.c) << ',' << row.seed << ',' << row.graph_edges << ',' << row.h_size
      << ',' << row.h_by_provenance << ',';
  if (row.achieved_diameter) out << *row.achieved_diameter;
  out << ',';
  if (row.achieved_hops) {
    if (*row.achieved_hops == std::numeric_limits<std::size_t>::max()) {
      out << "inf";
    } else {
      out << *row.achieved_hops;
    }
  }
  out << ',';
  if (row.achieved_stretch) {
    out << (std::isfinite(*row.achieved_stretch) ? format_double(*row.achieved_stretch) : "inf");
  }
  out << ',' << (row.verified ? "true" : "false") << ',';
  if (row.wall_ms) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << *row.wall_ms;
    out << ms.str();
  }
  out << ',' << error << '\n';
}

std::size_t default_thread_count() {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SHORTCUT_FORGE_THREADS")) {
    std::size_t cap = 0;
    const std::string_view text(env);
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec == std::errc{} && end == text.data() + text.size() && cap > 0)
      threads = std::min(threads, cap);
  }
  return threads;
}

}  // namespace sforge
