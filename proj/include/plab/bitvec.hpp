#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace plab {

/// Number of variables a word-packed input can carry. Bit i of a word is
/// coordinate x_i (index 0 is the first coordinate / constant coefficient).
inline constexpr unsigned kWordBits = 64;

inline constexpr std::uint64_t low_mask(unsigned bits) noexcept {
  return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

inline constexpr bool parity(std::uint64_t x) noexcept { return (std::popcount(x) & 1) != 0; }

inline constexpr bool bit_of(std::uint64_t x, unsigned i) noexcept { return ((x >> i) & 1U) != 0; }

/// Variable-length bit string. Index 0 is the first character of the
/// textual form and the least significant bit of the hex form.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
  BitVec(std::size_t size, std::uint64_t low_bits);

  static BitVec from_string(std::string_view bits);
  static BitVec from_hex(std::string_view hex, std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool get(std::size_t i) const noexcept { return ((words_[i / 64] >> (i % 64)) & 1U) != 0; }
  void set(std::size_t i, bool v) noexcept {
    const std::uint64_t m = std::uint64_t{1} << (i % 64);
    if (v)
      words_[i / 64] |= m;
    else
      words_[i / 64] &= ~m;
  }

  /// First min(64, size) bits packed into a word.
  std::uint64_t word() const noexcept { return words_.empty() ? 0 : words_[0]; }
  /// Bits [offset, offset + count) packed into a word; count <= 64.
  std::uint64_t extract(std::size_t offset, unsigned count) const;
  void deposit(std::size_t offset, unsigned count, std::uint64_t value);

  BitVec slice(std::size_t offset, std::size_t count) const;
  BitVec concat(const BitVec& tail) const;

  std::size_t weight() const noexcept;

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  std::string to_string() const;
  std::string to_hex() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Gather the bits of `x` at `positions` into a packed index (positions[j] -> bit j).
template <typename Positions>
inline std::uint64_t gather_bits(std::uint64_t x, const Positions& positions) noexcept {
  std::uint64_t out = 0;
  unsigned j = 0;
  for (auto p : positions) out |= static_cast<std::uint64_t>((x >> p) & 1U) << j++;
  return out;
}

}  // namespace plab
