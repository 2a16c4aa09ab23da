#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shortcut_forge/generators.hpp"
#include "shortcut_forge/hopset_algos.hpp"

namespace sforge {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class Algorithm { folklore, small_diam, large_d, hopset_small, hopset_large };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view text);
bool is_hopset(Algorithm a);

/// Parameter grid of a benchmark run. Every list is expanded as a cartesian
/// product in the order algorithm, family, n, p (or density), W, D or
/// (beta, eps), c, seed.
struct BenchConfig {
  std::vector<Algorithm> algorithms;
  std::vector<Family> families;
  std::vector<std::size_t> sizes;
  std::vector<double> probabilities;
  /// Alternative to probabilities: expected edges per vertex.
  std::vector<double> densities;
  std::vector<Weight> max_weights{1};
  std::vector<std::size_t> diameters;
  std::vector<std::size_t> betas;
  std::vector<Rational> epsilons;
  std::vector<double> constants{3.0};
  std::vector<std::uint64_t> seeds;
  bool timing = true;
};

/// Minimal key=value format, one key per line, `#` comments, comma-separated
/// lists, and `a..b` ranges in the seeds list. Keys: algorithms, family, n,
/// p, density, W, D, beta, eps, c, seeds, timing (on|off).
/// Throws ConfigError with the offending line.
BenchConfig parse_bench_config(std::istream& in);

struct BenchRow {
  Algorithm algorithm = Algorithm::folklore;
  Family family = Family::random_dag;
  std::size_t n = 0;
  double p = 0.0;
  Weight max_weight = 1;
  std::size_t diameter = 0;  // shortcut algorithms
  std::size_t beta = 0;      // hopset algorithms
  Rational eps{1, 4};
  double c = 3.0;
  std::uint64_t seed = 0;

  std::size_t graph_edges = 0;
  std::size_t h_size = 0;
  /// "tag=count" pairs joined by ';', every tag of the algorithm listed.
  std::string h_by_provenance;
  std::optional<std::size_t> achieved_diameter;
  std::optional<std::size_t> achieved_hops;
  std::optional<double> achieved_stretch;
  bool verified = false;
  std::optional<double> wall_ms;
  /// Set instead of the metrics when the cell's parameters are rejected.
  std::string error;
};

/// The large-D and large-hop constructions promise O(D) and O(beta); rows
/// for them are verified against this multiple of the nominal target.
inline constexpr std::size_t kLargeBudgetFactor = 4;

/// Diameter or hop budget a row is verified against.
std::size_t verification_budget(const BenchRow& row);

/// Expands the grid without running it.
std::vector<BenchRow> expand_grid(const BenchConfig& config);

/// Generates the instance, builds H, and fills the metrics from the oracles.
void run_cell(BenchRow& row, bool timing);

/// Runs every cell on up to `threads` workers; rows keep grid order.
std::vector<BenchRow> run_bench(const BenchConfig& config, std::size_t threads);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchRow& row);

/// min(hardware threads, SHORTCUT_FORGE_THREADS when set), at least 1.
std::size_t default_thread_count();

}  // namespace sforge
