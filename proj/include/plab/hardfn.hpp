#pragma once

#include <cstdint>
#include <functional>

#include "plab/bitvec.hpp"
#include "plab/boolean_function.hpp"
#include "plab/extractors.hpp"
#include "plab/gf2.hpp"

namespace plab {

/// n bits cut into d contiguous blocks of n/d bits; block i is bits
/// [i*n/d, (i+1)*n/d). Blocks are 0-indexed.
class BlockedInput {
 public:
  BlockedInput(BitVec bits, unsigned d);

  unsigned blocks() const noexcept { return d_; }
  unsigned block_size() const noexcept { return b_; }
  const BitVec& bits() const noexcept { return bits_; }
  /// X_i packed into a word (block size <= 64).
  std::uint64_t block(unsigned i) const;
  /// X_{-i}: every block except i, in order.
  BitVec without(unsigned i) const;

 private:
  BitVec bits_;
  unsigned d_;
  unsigned b_;
};

/// sum_{i<m} prod_{j<k} x_{ij}, with x_{ij} at bit j*m + i.
bool gip(unsigned m, unsigned k, const BitVec& x);
bool gip_word(unsigned m, unsigned k, std::uint64_t x) noexcept;

/// sum_i prod_j XOR_l x_{ijl}, with x_{ijl} at bit j*m*r + i*r + l.
bool rw(unsigned m, unsigned k, unsigned r, const BitVec& x);
bool rw_word(unsigned m, unsigned k, unsigned r, std::uint64_t x) noexcept;

/// lsb(X_1 * ... * X_d) over the field of width n/d.
bool ffm(unsigned d, const BlockedInput& x, const gf2::FieldSpec& spec);

/// lsb(prod_i Ext(X_i, W)) with a shared Toeplitz seed W of 2n/d bits.
bool extffm(unsigned d, const BlockedInput& x, const BitVec& seed, const gf2::FieldSpec& spec);

/// A block map {0,1}^in -> {0,1}^out on words.
struct BlockMap {
  unsigned in = 0;
  unsigned out = 0;
  std::function<std::uint64_t(std::uint64_t)> apply;

  static BlockMap identity(unsigned bits);
  static BlockMap parity(unsigned m, unsigned r);
  static BlockMap toeplitz(const ToeplitzExtractor& ext);
};

/// f(Ext(X_1), ..., Ext(X_k)) on k*ext.in bits; f has arity k*ext.out.
BooleanFunction compose_ext(const BooleanFunction& f, const BlockMap& ext, unsigned k);

BooleanFunction gip_function(unsigned m, unsigned k);
BooleanFunction rw_function(unsigned m, unsigned k, unsigned r);
BooleanFunction ffm_function(unsigned d, const gf2::FieldSpec& spec);
/// extffm on the n = d * block bits of X, seed fixed.
BooleanFunction extffm_function(unsigned d, unsigned block, const BitVec& seed, const gf2::FieldSpec& spec);
/// extffm on the n + 2n/d bits (X, W) with the seed as trailing input.
BooleanFunction extffm_seeded_function(unsigned d, unsigned block, const gf2::FieldSpec& spec);

}  // namespace plab
