#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sforge {

/// Square boolean matrix with word-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_(word_count(n)), bits_(n * word_count(n), 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c) noexcept {
    bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  void reset(std::size_t r, std::size_t c) noexcept {
    bits_[r * words_ + c / 64] &= ~(std::uint64_t{1} << (c % 64));
  }

  std::span<const std::uint64_t> row(std::size_t r) const noexcept {
    return {bits_.data() + r * words_, words_};
  }
  std::span<std::uint64_t> row(std::size_t r) noexcept {
    return {bits_.data() + r * words_, words_};
  }

  std::size_t count() const noexcept;
  std::size_t count_row(std::size_t r) const noexcept;

  /// Boolean product: (this * other)(i,j) = OR_k this(i,k) AND other(k,j).
  BitMatrix multiply(const BitMatrix& other) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  static std::size_t word_count(std::size_t n) noexcept { return (n + 63) / 64; }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace sforge
