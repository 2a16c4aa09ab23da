#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace sforge {

/// Seeded generator with named, order-independent sub-streams.
///
/// Every sampling site draws from `fork("<site>")`, whose seed depends only on
/// the parent seed and the site name, so evaluation order never changes the
/// draws. Distributions are implemented here rather than with <random>
/// adaptors, whose algorithms differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  Rng fork(std::string_view site) const;

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Always consumes exactly one draw.
  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [0, bound), bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Each of 0..n-1 kept independently with probability p, ascending.
std::vector<std::uint32_t> bernoulli_sample(Rng& rng, std::size_t n, double p);

/// Exactly min(k, n) distinct ids from 0..n-1, uniformly, ascending.
std::vector<std::uint32_t> fixed_size_sample(Rng& rng, std::size_t n, std::size_t k);

}  // namespace sforge
