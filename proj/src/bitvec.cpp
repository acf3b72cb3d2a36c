#include "plab/bitvec.hpp"

#include <algorithm>

#include "plab/error.hpp"

namespace plab {

BitVec::BitVec(std::size_t size, std::uint64_t low_bits) : BitVec(size) {
  if (size == 0) return;
  words_[0] = low_bits & low_mask(static_cast<unsigned>(std::min<std::size_t>(size, 64)));
}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      fail(ErrorCode::ParseError, "bit string contains '" + std::string(1, bits[i]) + "'");
    v.set(i, bits[i] == '1');
  }
  return v;
}

BitVec BitVec::from_hex(std::string_view hex, std::size_t size) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  BitVec v(size);
  std::size_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    const char c = *it;
    unsigned nibble = 0;
    if (c >= '0' && c <= '9')
      nibble = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      nibble = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F')
      nibble = static_cast<unsigned>(c - 'A' + 10);
    else
      fail(ErrorCode::ParseError, "bad hex digit '" + std::string(1, c) + "'");
    for (unsigned j = 0; j < 4; ++j) {
      if (((nibble >> j) & 1U) == 0) continue;
      if (bit + j >= size) fail(ErrorCode::ParseError, "hex value wider than " + std::to_string(size) + " bits");
      v.set(bit + j, true);
    }
  }
  return v;
}

std::uint64_t BitVec::extract(std::size_t offset, unsigned count) const {
  require(count <= 64 && offset + count <= size_, ErrorCode::LengthMismatch, "extract out of range");
  if (count == 0) return 0;
  const std::size_t w = offset / 64, s = offset % 64;
  std::uint64_t v = words_[w] >> s;
  if (s != 0 && w + 1 < words_.size()) v |= words_[w + 1] << (64 - s);
  return v & low_mask(count);
}

void BitVec::deposit(std::size_t offset, unsigned count, std::uint64_t value) {
  require(count <= 64 && offset + count <= size_, ErrorCode::LengthMismatch, "deposit out of range");
  for (unsigned j = 0; j < count; ++j) set(offset + j, bit_of(value, j));
}

BitVec BitVec::slice(std::size_t offset, std::size_t count) const {
  require(offset + count <= size_, ErrorCode::LengthMismatch, "slice out of range");
  BitVec out(count);
  for (std::size_t i = 0; i < count; i += 64) {
    const auto n = static_cast<unsigned>(std::min<std::size_t>(64, count - i));
    out.words_[i / 64] = extract(offset + i, n);
  }
  return out;
}

BitVec BitVec::concat(const BitVec& tail) const {
  BitVec out(size_ + tail.size_);
  out.words_.assign(words_.begin(), words_.end());
  out.words_.resize((out.size_ + 63) / 64, 0);
  for (std::size_t i = 0; i < tail.size_; i += 64) {
    const auto n = static_cast<unsigned>(std::min<std::size_t>(64, tail.size_ - i));
    const std::uint64_t chunk = tail.extract(i, n);
    for (unsigned j = 0; j < n; ++j) out.set(size_ + i + j, bit_of(chunk, j));
  }
  return out;
}

std::size_t BitVec::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  require(size_ == other.size_, ErrorCode::LengthMismatch, "xor of bit vectors with different lengths");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::string BitVec::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = std::max<std::size_t>(1, (size_ + 3) / 4);
  std::string s(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (unsigned j = 0; j < 4; ++j) {
      const std::size_t i = d * 4 + j;
      if (i < size_ && get(i)) nibble |= 1U << j;
    }
    s[digits - 1 - d] = kDigits[nibble];
  }
  return s;
}

}  // namespace plab
