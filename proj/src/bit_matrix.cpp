#include "shortcut_forge/bit_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace sforge {

std::size_t BitMatrix::count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitMatrix::count_row(std::size_t r) const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : row(r)) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BitMatrix BitMatrix::multiply(const BitMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("BitMatrix::multiply: size mismatch");
  BitMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto dst = out.row(i);
    auto lhs = row(i);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = lhs[w];
      while (word != 0) {
        const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        auto src = other.row(k);
        for (std::size_t j = 0; j < words_; ++j) dst[j] |= src[j];
      }
    }
  }
  return out;
}

}  // namespace sforge
