#include "plab/hardfn.hpp"

#include <string>

#include "plab/error.hpp"

namespace plab {
namespace {

void require_width(std::size_t have, std::size_t want, const char* what) {
  require(have == want, ErrorCode::ShapeMismatch,
          std::string(what) + " expects " + std::to_string(want) + " input bits, got " + std::to_string(have));
}

}  // namespace

BlockedInput::BlockedInput(BitVec bits, unsigned d) : bits_(std::move(bits)), d_(d) {
  require(d >= 1 && bits_.size() % d == 0, ErrorCode::ShapeMismatch,
          std::to_string(d) + " blocks do not divide " + std::to_string(bits_.size()) + " bits");
  b_ = static_cast<unsigned>(bits_.size() / d);
  require(b_ <= kWordBits, ErrorCode::ShapeMismatch, "blocks are limited to 64 bits");
}

std::uint64_t BlockedInput::block(unsigned i) const {
  require(i < d_, ErrorCode::ShapeMismatch, "block index out of range");
  return bits_.extract(static_cast<std::size_t>(i) * b_, b_);
}

BitVec BlockedInput::without(unsigned i) const {
  require(i < d_, ErrorCode::ShapeMismatch, "block index out of range");
  return bits_.slice(0, static_cast<std::size_t>(i) * b_)
      .concat(bits_.slice(static_cast<std::size_t>(i + 1) * b_, bits_.size() - static_cast<std::size_t>(i + 1) * b_));
}

bool gip_word(unsigned m, unsigned k, std::uint64_t x) noexcept {
  std::uint64_t all = low_mask(m);
  for (unsigned j = 0; j < k; ++j) all &= x >> (j * m);
  return parity(all & low_mask(m));
}

bool gip(unsigned m, unsigned k, const BitVec& x) {
  require_width(x.size(), static_cast<std::size_t>(m) * k, "GIP");
  if (x.size() <= kWordBits) return gip_word(m, k, x.word());
  bool acc = false;
  for (unsigned i = 0; i < m; ++i) {
    bool term = true;
    for (unsigned j = 0; j < k && term; ++j) term = x.get(static_cast<std::size_t>(j) * m + i);
    acc ^= term;
  }
  return acc;
}

bool rw_word(unsigned m, unsigned k, unsigned r, std::uint64_t x) noexcept {
  bool acc = false;
  for (unsigned i = 0; i < m; ++i) {
    bool term = true;
    for (unsigned j = 0; j < k; ++j) {
      bool p = false;
      for (unsigned l = 0; l < r; ++l) p ^= bit_of(x, j * m * r + i * r + l);
      term = term && p;
    }
    acc ^= term;
  }
  return acc;
}

bool rw(unsigned m, unsigned k, unsigned r, const BitVec& x) {
  require_width(x.size(), static_cast<std::size_t>(m) * k * r, "RW");
  if (x.size() <= kWordBits) return rw_word(m, k, r, x.word());
  bool acc = false;
  for (unsigned i = 0; i < m; ++i) {
    bool term = true;
    for (unsigned j = 0; j < k; ++j) {
      bool p = false;
      for (unsigned l = 0; l < r; ++l) p ^= x.get((static_cast<std::size_t>(j) * m + i) * r + l);
      term = term && p;
    }
    acc ^= term;
  }
  return acc;
}

bool ffm(unsigned d, const BlockedInput& x, const gf2::FieldSpec& spec) {
  require(x.blocks() == d, ErrorCode::ShapeMismatch, "input is not split into d blocks");
  require(spec.width() == x.block_size(), ErrorCode::SpecMismatch,
          "field width " + std::to_string(spec.width()) + " differs from block size " +
              std::to_string(x.block_size()));
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < d; ++i) acc = spec.mul(acc, x.block(i));
  return acc & 1U;
}

bool extffm(unsigned d, const BlockedInput& x, const BitVec& seed, const gf2::FieldSpec& spec) {
  require(x.blocks() == d, ErrorCode::ShapeMismatch, "input is not split into d blocks");
  require(seed.size() == ToeplitzExtractor::seed_length(x.block_size()), ErrorCode::ShapeMismatch,
          "seed must have 2n/d = " + std::to_string(2 * x.block_size()) + " bits");
  require(spec.width() <= x.block_size(), ErrorCode::ShapeMismatch, "field wider than a block");
  const ToeplitzExtractor ext(x.block_size(), spec.width(), seed);
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < d; ++i) acc = spec.mul(acc, ext(x.block(i)));
  return acc & 1U;
}

BlockMap BlockMap::identity(unsigned bits) {
  return {bits, bits, [](std::uint64_t x) { return x; }};
}

BlockMap BlockMap::parity(unsigned m, unsigned r) {
  return {m * r, m, [m, r](std::uint64_t x) { return parity_blocks_word(m, r, x); }};
}

BlockMap BlockMap::toeplitz(const ToeplitzExtractor& ext) {
  return {ext.input_length(), ext.output_length(), [ext](std::uint64_t x) { return ext(x); }};
}

BooleanFunction compose_ext(const BooleanFunction& f, const BlockMap& ext, unsigned k) {
  require(f.arity() == k * ext.out, ErrorCode::ShapeMismatch,
          "outer function arity " + std::to_string(f.arity()) + " != k * extractor output " +
              std::to_string(k * ext.out));
  require(k * ext.in <= kWordBits, ErrorCode::ArityTooLarge, "composed function would exceed 64 inputs");
  const unsigned in = ext.in;
  const unsigned out = ext.out;
  const auto map = ext.apply;
  return {k * in, [f, map, in, out, k](std::uint64_t x) {
            std::uint64_t y = 0;
            for (unsigned j = 0; j < k; ++j) y |= map((x >> (j * in)) & low_mask(in)) << (j * out);
            return f(y);
          }};
}

BooleanFunction gip_function(unsigned m, unsigned k) {
  require(m * k <= kWordBits, ErrorCode::ArityTooLarge, "GIP above 64 inputs");
  return {m * k, [m, k](std::uint64_t x) { return gip_word(m, k, x); }};
}

BooleanFunction rw_function(unsigned m, unsigned k, unsigned r) {
  require(m * k * r <= kWordBits, ErrorCode::ArityTooLarge, "RW above 64 inputs");
  return {m * k * r, [m, k, r](std::uint64_t x) { return rw_word(m, k, r, x); }};
}

BooleanFunction ffm_function(unsigned d, const gf2::FieldSpec& spec) {
  const unsigned b = spec.width();
  require(d * b <= kWordBits, ErrorCode::ArityTooLarge, "FFM above 64 inputs");
  return {d * b, [d, b, spec](std::uint64_t x) {
            std::uint64_t acc = 1;
            for (unsigned i = 0; i < d; ++i) acc = spec.mul(acc, (x >> (i * b)) & low_mask(b));
            return (acc & 1U) != 0;
          }};
}

BooleanFunction extffm_function(unsigned d, unsigned block, const BitVec& seed, const gf2::FieldSpec& spec) {
  require(d * block <= kWordBits, ErrorCode::ArityTooLarge, "ExtFFM above 64 inputs");
  const ToeplitzExtractor ext(block, spec.width(), seed);
  return {d * block, [d, block, ext, spec](std::uint64_t x) {
            std::uint64_t acc = 1;
            for (unsigned i = 0; i < d; ++i) acc = spec.mul(acc, ext((x >> (i * block)) & low_mask(block)));
            return (acc & 1U) != 0;
          }};
}

BooleanFunction extffm_seeded_function(unsigned d, unsigned block, const gf2::FieldSpec& spec) {
  const unsigned n = d * block;
  require(n + 2 * block <= kWordBits, ErrorCode::ArityTooLarge, "ExtFFM with seed above 64 inputs");
  require(spec.width() <= block, ErrorCode::ShapeMismatch, "field wider than a block");
  return {n + 2 * block, [d, block, n, spec](std::uint64_t x) {
            const ToeplitzExtractor ext(block, spec.width(), BitVec(2 * block, x >> n));
            std::uint64_t acc = 1;
            for (unsigned i = 0; i < d; ++i) acc = spec.mul(acc, ext((x >> (i * block)) & low_mask(block)));
            return (acc & 1U) != 0;
          }};
}

}  // namespace plab
