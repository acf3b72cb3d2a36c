#include "plab/extractors.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "plab/error.hpp"

namespace plab {
namespace {

unsigned ceil_log2(std::uint64_t v) { return v <= 1 ? 0 : static_cast<unsigned>(std::bit_width(v - 1)); }

void require_seed(const BitVec& seed, unsigned expected, const char* what) {
  require(seed.size() == expected, ErrorCode::LengthMismatch,
          std::string(what) + " seed has " + std::to_string(seed.size()) + " bits, expected " +
              std::to_string(expected));
}

}  // namespace

BitFixingSource::BitFixingSource(unsigned n, std::uint64_t free_mask, std::uint64_t fixed_values)
    : n_(n), free_mask_(free_mask), fixed_(fixed_values & ~free_mask) {
  require(n <= kWordBits, ErrorCode::ArityTooLarge, "bit-fixing sources hold at most 64 bits");
  require(((free_mask | fixed_values) & ~low_mask(n)) == 0, ErrorCode::LengthMismatch,
          "bit-fixing source masks exceed its length");
  for (unsigned i = 0; i < n; ++i)
    if (bit_of(free_mask, i)) free_.push_back(i);
}

void for_each_bit_fixing_source(unsigned n, unsigned k, const std::function<void(const BitFixingSource&)>& fn) {
  require(k <= n && n <= kWordBits, ErrorCode::ParameterOutOfRange, "need k <= n <= 64");
  if (k == 0) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) fn(BitFixingSource(n, 0, v));
    return;
  }
  const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
  // Gosper's hack walks k-subsets in increasing mask order.
  for (std::uint64_t s = low_mask(k); s != 0 && (limit == 0 || s < limit);) {
    const std::uint64_t fixed_positions = low_mask(n) & ~s;
    const unsigned fixed_count = n - k;
    std::vector<unsigned> pos;
    for (unsigned i = 0; i < n; ++i)
      if (bit_of(fixed_positions, i)) pos.push_back(i);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << fixed_count); ++v) {
      std::uint64_t values = 0;
      for (unsigned j = 0; j < fixed_count; ++j) values |= ((v >> j) & 1U) << pos[j];
      fn(BitFixingSource(n, s, values));
    }
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

std::uint64_t parity_blocks_word(unsigned m, unsigned r, std::uint64_t x) noexcept {
  std::uint64_t y = 0;
  for (unsigned i = 0; i < m; ++i) y |= static_cast<std::uint64_t>(parity((x >> (i * r)) & low_mask(r))) << i;
  return y;
}

BitVec parity_blocks(unsigned m, unsigned r, const BitVec& x) {
  require(x.size() == static_cast<std::size_t>(m) * r, ErrorCode::LengthMismatch,
          "block parity over " + std::to_string(m) + "x" + std::to_string(r) + " given " +
              std::to_string(x.size()) + " bits");
  BitVec y(m);
  for (unsigned i = 0; i < m; ++i) {
    bool p = false;
    for (unsigned j = 0; j < r; ++j) p ^= x.get(static_cast<std::size_t>(i) * r + j);
    y.set(i, p);
  }
  return y;
}

ToeplitzExtractor::ToeplitzExtractor(unsigned n, unsigned m, const BitVec& seed) : n_(n) {
  require(n <= kWordBits, ErrorCode::ArityTooLarge, "Toeplitz extractor input above 64 bits");
  require(m <= n, ErrorCode::OutputTooLong,
          "output length " + std::to_string(m) + " exceeds input length " + std::to_string(n));
  require_seed(seed, seed_length(n), "Toeplitz");
  rows_.resize(m);
  for (unsigned i = 0; i < m; ++i) {
    std::uint64_t row = 0;
    for (unsigned j = 0; j < n; ++j)
      if (seed.get(i + n - 1 - j)) row |= std::uint64_t{1} << j;
    rows_[i] = row;
  }
}

BitVec lhl_extract(const BitVec& x, const BitVec& seed, unsigned m) {
  const auto n = static_cast<unsigned>(x.size());
  const ToeplitzExtractor ext(n, m, seed);
  return BitVec(m, ext(x.word()));
}

std::uint64_t kz_default_cycle(unsigned m) {
  require(m >= 1 && m <= 62, ErrorCode::ParameterOutOfRange, "walk extractor output must be 1..62 bits");
  return (std::uint64_t{1} << (m + 1)) - 1;
}

std::uint64_t kz_endpoint(std::uint64_t x, unsigned n, std::uint64_t cycle) noexcept {
  const auto w = static_cast<std::int64_t>(std::popcount(x & low_mask(n)));
  const auto c = static_cast<std::int64_t>(cycle);
  const std::int64_t v = (2 * w - static_cast<std::int64_t>(n)) % c;
  return static_cast<std::uint64_t>(v < 0 ? v + c : v);
}

BitVec kz_extract(const BitVec& x, unsigned m, std::uint64_t cycle) {
  if (cycle == 0) cycle = kz_default_cycle(m);
  require(cycle % 2 == 1 && cycle >= 3, ErrorCode::ParameterOutOfRange, "cycle size must be odd and >= 3");
  require(m <= ceil_log2(cycle), ErrorCode::OutputTooLong,
          std::to_string(m) + " output bits exceed log2 of cycle size " + std::to_string(cycle));
  std::int64_t v = 0;
  const auto c = static_cast<std::int64_t>(cycle);
  for (std::size_t i = 0; i < x.size(); ++i) v = (v + (x.get(i) ? 1 : c - 1)) % c;
  return BitVec(m, static_cast<std::uint64_t>(v) & low_mask(m));
}

KWiseSampler::KWiseSampler(unsigned n, unsigned k)
    : n_(n), k_(k), field_(gf2::FieldSpec::standard(std::max(1U, ceil_log2(n)))) {
  require(n >= 1, ErrorCode::ParameterOutOfRange, "k-wise sampler needs n >= 1");
  require(k >= 1 && k <= n, ErrorCode::ParameterOutOfRange,
          "k = " + std::to_string(k) + " must lie in [1, n = " + std::to_string(n) + "]");
}

BitVec KWiseSampler::sample(const BitVec& seed) const {
  require_seed(seed, seed_length(), "k-wise");
  const unsigned b = field_.width();
  std::vector<std::uint64_t> coeff(k_);
  for (unsigned j = 0; j < k_; ++j) coeff[j] = seed.extract(static_cast<std::size_t>(j) * b, b);
  BitVec out(n_);
  for (unsigned i = 0; i < n_; ++i) {
    // Horner at the field element whose bits spell i.
    std::uint64_t acc = 0;
    for (unsigned j = k_; j-- > 0;) acc = field_.mul(acc, i) ^ coeff[j];
    out.set(i, acc & 1U);
  }
  return out;
}

SmallBiasSampler::SmallBiasSampler(unsigned n, unsigned field_width)
    : n_(n), field_(gf2::FieldSpec::standard(field_width)) {
  require(field_width >= 1 && field_width <= 64, ErrorCode::ParameterOutOfRange, "field width must be 1..64");
}

double SmallBiasSampler::bias_bound() const noexcept {
  return n_ <= 1 ? 0.0 : static_cast<double>(n_ - 1) / std::ldexp(1.0, static_cast<int>(field_.width()));
}

BitVec SmallBiasSampler::sample(const BitVec& seed) const {
  require_seed(seed, seed_length(), "small-bias");
  const unsigned b = field_.width();
  const std::uint64_t x = seed.extract(0, b);
  const std::uint64_t y = seed.extract(b, b);
  BitVec out(n_);
  std::uint64_t power = 1;
  for (unsigned i = 0; i < n_; ++i) {
    out.set(i, parity(power & y));
    power = field_.mul(power, x);
  }
  return out;
}

namespace {

unsigned almost_kwise_field_width(unsigned n, unsigned k, double delta) {
  require(delta > 0.0 && delta <= 1.0, ErrorCode::InvalidProbability, "delta must lie in (0, 1]");
  const KWiseSampler linear(n, k);
  const double eps = delta * std::pow(2.0, -0.5 * k);
  const double need = std::log2(static_cast<double>(linear.seed_length()) / eps);
  const auto b = static_cast<unsigned>(std::max(1.0, std::ceil(need - 1e-12)));
  require(b <= 64, ErrorCode::ParameterOutOfRange, "almost k-wise sampler would need a field above 2^64");
  return b;
}

}  // namespace

AlmostKWiseSampler::AlmostKWiseSampler(unsigned n, unsigned k, double delta)
    : delta_(delta),
      linear_(n, k),
      bias_(linear_.seed_length(), almost_kwise_field_width(n, k, delta)) {}

BitVec AlmostKWiseSampler::sample(const BitVec& seed) const { return linear_.sample(bias_.sample(seed)); }

unsigned ber_rounded_d(unsigned d) {
  require(d >= 1 && d <= (1U << 30), ErrorCode::ParameterOutOfRange, "d must be a positive integer");
  return std::bit_ceil(d);
}

BerSampler::BerSampler(unsigned n, unsigned d, unsigned ell, double delta) : n_(n), d_(ber_rounded_d(d)) {
  require(delta > 0.0 && delta <= 1.0, ErrorCode::InvalidProbability, "delta must lie in (0, 1]");
  const unsigned t = strings();
  for (unsigned i = 0; i < t; ++i) inner_.emplace_back(n, std::min(ell, n), delta / t);
}

unsigned BerSampler::seed_length() const noexcept {
  return inner_.empty() ? 0 : static_cast<unsigned>(inner_.size()) * inner_.front().seed_length();
}

BitVec BerSampler::sample(const BitVec& seed) const {
  require_seed(seed, seed_length(), "Ber(1/d)");
  BitVec out(n_);
  for (unsigned i = 0; i < n_; ++i) out.set(i, true);
  std::size_t offset = 0;
  for (const auto& s : inner_) {
    const auto part = s.sample(seed.slice(offset, s.seed_length()));
    offset += s.seed_length();
    for (unsigned i = 0; i < n_; ++i)
      if (!part.get(i)) out.set(i, false);
  }
  return out;
}

BitVec sample_kwise(unsigned n, unsigned k, const BitVec& seed) { return KWiseSampler(n, k).sample(seed); }

BitVec sample_small_bias(unsigned n, unsigned field_width, const BitVec& seed) {
  return SmallBiasSampler(n, field_width).sample(seed);
}

BitVec sample_almost_kwise(unsigned n, unsigned k, double delta, const BitVec& seed) {
  return AlmostKWiseSampler(n, k, delta).sample(seed);
}

BitVec sample_ber_almost_kwise(unsigned n, unsigned d, unsigned ell, double delta, const BitVec& seed) {
  return BerSampler(n, d, ell, delta).sample(seed);
}

}  // namespace plab
