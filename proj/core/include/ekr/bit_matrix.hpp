#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ekr {

// Square 0/1 matrix with 64-bit packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t size) : size_(size), words_((size + 63) / 64), bits_(size_ * words_, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u; }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  void set_symmetric(std::size_t i, std::size_t j) {
    set(i, j);
    set(j, i);
  }

  std::span<const std::uint64_t> row(std::size_t i) const { return {bits_.data() + i * words_, words_}; }
  std::span<std::uint64_t> row(std::size_t i) { return {bits_.data() + i * words_, words_}; }

  std::size_t row_count(std::size_t i) const {
    std::size_t c = 0;
    for (auto w : row(i)) c += std::popcount(w);
    return c;
  }

  // Off-diagonal complement.
  BitMatrix complement() const {
    BitMatrix out(size_);
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = ~bits_[i];
    for (std::size_t i = 0; i < size_; ++i) {
      out.bits_[i * words_ + i / 64] &= ~(std::uint64_t{1} << (i % 64));
      if (size_ % 64) out.bits_[i * words_ + words_ - 1] &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
    return out;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace ekr
