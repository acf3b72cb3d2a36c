#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "plab/bitvec.hpp"
#include "plab/gf2.hpp"
#include "plab/random.hpp"

namespace plab {

/// Oblivious bit-fixing source on n <= 64 bits: the positions outside
/// `free_mask` hold `fixed_values`, the rest are uniform.
class BitFixingSource {
 public:
  BitFixingSource(unsigned n, std::uint64_t free_mask, std::uint64_t fixed_values);

  unsigned length() const noexcept { return n_; }
  unsigned min_entropy() const noexcept { return static_cast<unsigned>(free_.size()); }
  std::uint64_t free_mask() const noexcept { return free_mask_; }
  std::uint64_t fixed_values() const noexcept { return fixed_; }
  const std::vector<unsigned>& free_positions() const noexcept { return free_; }

  /// The i-th point of the support, i < 2^k: bit j of i fills free_positions()[j].
  std::uint64_t point(std::uint64_t i) const noexcept {
    std::uint64_t x = fixed_;
    for (std::size_t j = 0; j < free_.size(); ++j) x |= ((i >> j) & 1U) << free_[j];
    return x;
  }
  std::uint64_t sample(Rng& rng) const { return point(random_bits(rng, min_entropy())); }

 private:
  unsigned n_;
  std::uint64_t free_mask_;
  std::uint64_t fixed_;
  std::vector<unsigned> free_;
};

/// Calls `fn` on every bit-fixing source of length n with exactly k free bits,
/// free sets in colexicographic order, then fixed values in increasing order.
void for_each_bit_fixing_source(unsigned n, unsigned k, const std::function<void(const BitFixingSource&)>& fn);

/// Block parity: output i is the parity of bits [i*r, (i+1)*r).
BitVec parity_blocks(unsigned m, unsigned r, const BitVec& x);
std::uint64_t parity_blocks_word(unsigned m, unsigned r, std::uint64_t x) noexcept;

/// Toeplitz hashing x -> T x with T[i][j] = seed[i - j + n - 1]. The seed is
/// 2n bits; only the first n + m - 1 are read.
class ToeplitzExtractor {
 public:
  ToeplitzExtractor(unsigned n, unsigned m, const BitVec& seed);

  static unsigned seed_length(unsigned n) noexcept { return 2 * n; }

  unsigned input_length() const noexcept { return n_; }
  unsigned output_length() const noexcept { return static_cast<unsigned>(rows_.size()); }
  /// Row i of T as a word, bit j = T[i][j].
  const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }

  std::uint64_t operator()(std::uint64_t x) const noexcept {
    std::uint64_t y = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) y |= static_cast<std::uint64_t>(parity(rows_[i] & x)) << i;
    return y;
  }

 private:
  unsigned n_;
  std::vector<std::uint64_t> rows_;
};

BitVec lhl_extract(const BitVec& x, const BitVec& seed, unsigned m);

/// Default cycle size for an m-bit walk extractor: the largest odd M <= 2^{m+1}.
std::uint64_t kz_default_cycle(unsigned m);

/// Walk on the odd cycle Z_M from 0: bit 1 steps +1, bit 0 steps -1. The
/// output is the endpoint label v mod 2^m.
BitVec kz_extract(const BitVec& x, unsigned m, std::uint64_t cycle = 0);
std::uint64_t kz_endpoint(std::uint64_t x, unsigned n, std::uint64_t cycle) noexcept;

/// Exact k-wise uniform bits: output i = lsb(p(i)) for a random polynomial p
/// of degree < k over F_{2^b}, b = max(1, ceil(log2 n)). Seed bits [j*b, (j+1)*b)
/// hold the coefficient of x^j. The map is linear in the seed.
class KWiseSampler {
 public:
  KWiseSampler(unsigned n, unsigned k);

  unsigned length() const noexcept { return n_; }
  unsigned k() const noexcept { return k_; }
  unsigned seed_length() const noexcept { return k_ * field_.width(); }
  const gf2::FieldSpec& field() const noexcept { return field_; }

  BitVec sample(const BitVec& seed) const;

 private:
  unsigned n_;
  unsigned k_;
  gf2::FieldSpec field_;
};

/// Powering small-bias space: seed (x, y) in F_{2^b}^2, output i = <x^i, y>.
/// Bias at most (n - 1) / 2^b.
class SmallBiasSampler {
 public:
  SmallBiasSampler(unsigned n, unsigned field_width);

  unsigned length() const noexcept { return n_; }
  unsigned seed_length() const noexcept { return 2 * field_.width(); }
  const gf2::FieldSpec& field() const noexcept { return field_; }
  double bias_bound() const noexcept;

  BitVec sample(const BitVec& seed) const;

 private:
  unsigned n_;
  gf2::FieldSpec field_;
};

/// delta-almost k-wise uniform bits: a small-bias string of length k*b is
/// fed as the seed of the (linear) k-wise sampler. With bias
/// eps = delta * 2^{-k/2} every k-coordinate marginal is delta-close to uniform.
class AlmostKWiseSampler {
 public:
  AlmostKWiseSampler(unsigned n, unsigned k, double delta);

  unsigned length() const noexcept { return linear_.length(); }
  unsigned seed_length() const noexcept { return bias_.seed_length(); }
  double delta() const noexcept { return delta_; }
  const KWiseSampler& linear() const noexcept { return linear_; }
  const SmallBiasSampler& small_bias() const noexcept { return bias_; }

  BitVec sample(const BitVec& seed) const;

 private:
  double delta_;
  KWiseSampler linear_;
  SmallBiasSampler bias_;
};

/// Rounds d up to a power of two.
unsigned ber_rounded_d(unsigned d);

/// Coordinatewise AND of log2(d) independent (delta / log2 d)-almost
/// ell-wise strings; seed = their seeds concatenated.
class BerSampler {
 public:
  BerSampler(unsigned n, unsigned d, unsigned ell, double delta);

  unsigned length() const noexcept { return n_; }
  unsigned d() const noexcept { return d_; }
  unsigned strings() const noexcept { return static_cast<unsigned>(std::countr_zero(d_)); }
  unsigned seed_length() const noexcept;
  const AlmostKWiseSampler* component() const noexcept { return inner_.empty() ? nullptr : &inner_.front(); }

  BitVec sample(const BitVec& seed) const;

 private:
  unsigned n_;
  unsigned d_;
  std::vector<AlmostKWiseSampler> inner_;
};

BitVec sample_kwise(unsigned n, unsigned k, const BitVec& seed);
BitVec sample_small_bias(unsigned n, unsigned field_width, const BitVec& seed);
BitVec sample_almost_kwise(unsigned n, unsigned k, double delta, const BitVec& seed);
BitVec sample_ber_almost_kwise(unsigned n, unsigned d, unsigned ell, double delta, const BitVec& seed);

}  // namespace plab
