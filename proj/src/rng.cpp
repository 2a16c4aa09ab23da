#include "shortcut_forge/rng.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace sforge {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::fork(std::string_view site) const {
  // FNV-1a over the site name, mixed with the parent seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char ch : site) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return Rng(splitmix64(seed_ ^ splitmix64(h)));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::vector<std::uint32_t> bernoulli_sample(Rng& rng, std::size_t n, double p) {
  std::vector<std::uint32_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (rng.bernoulli(p)) kept.push_back(static_cast<std::uint32_t>(i));
  return kept;
}

std::vector<std::uint32_t> fixed_size_sample(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0U);
  k = std::min(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(k);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace sforge
