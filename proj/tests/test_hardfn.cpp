#include <gtest/gtest.h>

#include <optional>

#include "oracles/field_oracle.hpp"
#include "oracles/rw_oracle.hpp"
#include "plab/error.hpp"
#include "plab/hardfn.hpp"
#include "plab/random.hpp"

using namespace plab;

namespace {

std::vector<int> flat_bits(std::uint64_t x, unsigned n) {
  std::vector<int> v(n);
  for (unsigned i = 0; i < n; ++i) v[i] = static_cast<int>((x >> i) & 1U);
  return v;
}

std::optional<ErrorCode> code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST(Blocked, BlocksAndComplement) {
  const BlockedInput x(BitVec::from_string("110100"), 3);
  EXPECT_EQ(x.block_size(), 2U);
  EXPECT_EQ(x.block(0), 0b11U);
  EXPECT_EQ(x.block(1), 0b10U);  // bits "01": x_2 = 0, x_3 = 1
  EXPECT_EQ(x.block(2), 0U);
  EXPECT_EQ(x.without(1).to_string(), "1100");
  EXPECT_EQ(code_of([] { BlockedInput(BitVec(5), 2); }), ErrorCode::ShapeMismatch);
}

TEST(Gip, Examples) {
  // Blocks (1,1) and (1,0).
  EXPECT_TRUE(gip(2, 2, BitVec::from_string("1110")));
  for (std::uint64_t x = 0; x < 16; ++x) EXPECT_EQ(gip_word(4, 1, x), std::popcount(x) % 2 == 1);
  EXPECT_EQ(code_of([] { gip(2, 2, BitVec(5)); }), ErrorCode::ShapeMismatch);
}

TEST(Gip, TwoBlocksIsInnerProduct) {
  for (std::uint64_t x = 0; x < 64; ++x) {
    const BitVec v(6, x);
    ASSERT_EQ(gip(3, 2, v), gf2::inner_product(v.slice(0, 3), v.slice(3, 3))) << x;
  }
}

TEST(Rw, SmallCases) {
  EXPECT_TRUE(rw(1, 1, 1, BitVec::from_string("1")));
  EXPECT_FALSE(rw(1, 1, 1, BitVec::from_string("0")));
  for (std::uint64_t x = 0; x < 4; ++x) EXPECT_EQ(rw_word(1, 2, 1, x), x == 3);
  EXPECT_EQ(code_of([] { rw(2, 2, 2, BitVec(7)); }), ErrorCode::ShapeMismatch);
}

TEST(Rw, FactorizationAndDirectFormulaUpTo16Bits) {
  for (unsigned m = 1; m <= 16; ++m)
    for (unsigned k = 1; m * k <= 16; ++k)
      for (unsigned r = 1; m * k * r <= 16; ++r) {
        const unsigned n = m * k * r;
        const auto composed = compose_ext(gip_function(m, k), BlockMap::parity(m, r), k);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
          const bool v = rw_word(m, k, r, x);
          ASSERT_EQ(v, composed(x)) << m << k << r;
          ASSERT_EQ(v, oracle::rw_direct(m, k, r, flat_bits(x, n)) == 1) << m << k << r;
        }
      }
}

TEST(Ffm, Examples) {
  const auto f4 = gf2::FieldSpec::standard(2);
  // x * x = x + 1 in F_4.
  EXPECT_TRUE(ffm(2, BlockedInput(BitVec(4, 0b1010), 2), f4));
  EXPECT_FALSE(ffm(2, BlockedInput(BitVec(4, 0b0010), 2), f4));
  EXPECT_TRUE(ffm(3, BlockedInput(BitVec(6, 0b010101), 3), f4));
  EXPECT_EQ(code_of([&] { ffm(2, BlockedInput(BitVec(6), 2), f4); }), ErrorCode::SpecMismatch);
}

TEST(Ffm, ZeroBlockAnnihilatesAndMatchesOracle) {
  for (unsigned w : {2U, 3U, 4U}) {
    const auto spec = gf2::FieldSpec::standard(w);
    const std::uint64_t mod = spec.reduction() | (std::uint64_t{1} << w);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << (2 * w)); ++x) {
      const std::uint64_t a = x & low_mask(w), b = x >> w;
      const bool v = ffm(2, BlockedInput(BitVec(2 * w, x), 2), spec);
      ASSERT_EQ(v, (oracle::field_mul(a, b, mod, w) & 1U) != 0);
      if (a == 0 || b == 0) {
        ASSERT_FALSE(v);
      }
    }
  }
}

TEST(Ffm, SymmetricUnderBlockPermutation) {
  const auto f4 = gf2::FieldSpec::standard(2);
  const auto f2 = ffm_function(2, f4), f3 = ffm_function(3, f4);
  for (std::uint64_t x = 0; x < 16; ++x) ASSERT_EQ(f2(x), f2(((x & 3U) << 2) | (x >> 2)));
  const unsigned perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (std::uint64_t x = 0; x < 64; ++x)
    for (const auto& p : perms) {
      std::uint64_t y = 0;
      for (unsigned i = 0; i < 3; ++i) y |= ((x >> (2 * p[i])) & 3U) << (2 * i);
      ASSERT_EQ(f3(x), f3(y));
    }
}

TEST(ExtFfm, IdentitySeedReducesToFfm) {
  for (unsigned w : {2U, 3U}) {
    const auto spec = gf2::FieldSpec::standard(w);
    BitVec seed(2 * w);
    seed.set(w - 1, true);
    for (unsigned d : {2U, 3U})
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << (d * w)); ++x) {
        const BlockedInput in(BitVec(d * w, x), d);
        ASSERT_EQ(extffm(d, in, seed, spec), ffm(d, in, spec));
      }
  }
}

TEST(ExtFfm, MatchesHandComposition) {
  const auto f4 = gf2::FieldSpec::standard(2);
  const BitVec seed = BitVec::from_string("0110");
  for (std::uint64_t x = 0; x < 16; ++x) {
    const BitVec v(4, x);
    const auto e0 = lhl_extract(v.slice(0, 2), seed, 2).word();
    const auto e1 = lhl_extract(v.slice(2, 2), seed, 2).word();
    const bool want = (oracle::field_mul(e0, e1, 0b111, 2) & 1U) != 0;
    ASSERT_EQ(extffm(2, BlockedInput(v, 2), seed, f4), want) << x;
  }
}

TEST(ExtFfm, LinearInLastBlock) {
  Rng rng(51);
  const unsigned d = 3, b = 5, w = 3;
  const auto spec = gf2::FieldSpec::standard(w);
  for (int t = 0; t < 300; ++t) {
    const auto seed = random_bitvec(rng, 2 * b);
    const auto head = random_bitvec(rng, (d - 1) * b);
    const auto y = random_bitvec(rng, b), z = random_bitvec(rng, b);
    auto at = [&](const BitVec& last) { return extffm(d, BlockedInput(head.concat(last), d), seed, spec); };
    ASSERT_EQ(at(y ^ z), at(y) != at(z));
    ASSERT_FALSE(at(BitVec(b)));
  }
}

TEST(ExtFfm, SeededFunctionAgreesWithFixedSeed) {
  const auto f4 = gf2::FieldSpec::standard(2);
  const auto seeded = extffm_seeded_function(2, 3, f4);
  ASSERT_EQ(seeded.arity(), 12U);
  for (std::uint64_t w = 0; w < 64; ++w) {
    const auto fixed = extffm_function(2, 3, BitVec(6, w), f4);
    for (std::uint64_t x = 0; x < 64; ++x) ASSERT_EQ(seeded(x | (w << 6)), fixed(x));
  }
}

TEST(ComposeExt, IdentityAndParity) {
  const auto g = gip_function(3, 2);
  const auto id = compose_ext(g, BlockMap::identity(3), 2);
  for (std::uint64_t x = 0; x < 64; ++x) ASSERT_EQ(id(x), g(x));
  const auto par = compose_ext(BooleanFunction::parity(3), BlockMap::parity(3, 3), 1);
  for (std::uint64_t x = 0; x < 512; ++x) ASSERT_EQ(par(x), std::popcount(x) % 2 == 1);
}

TEST(ComposeExt, IgnoredBlockStaysIgnored) {
  // f on 3 blocks of 2 output bits that never reads block 1.
  const BooleanFunction f(6, [](std::uint64_t y) { return ((y & 3U) == 2) != (((y >> 4) & 1U) != 0); });
  Rng rng(52);
  const ToeplitzExtractor ext(4, 2, random_bitvec(rng, 8));
  const auto h = compose_ext(f, BlockMap::toeplitz(ext), 3);
  ASSERT_EQ(h.arity(), 12U);
  for (std::uint64_t x = 0; x < 4096; ++x)
    for (std::uint64_t flip = 1; flip < 16; ++flip) ASSERT_EQ(h(x), h(x ^ (flip << 4)));
}

TEST(ComposeExt, ShapeMismatch) {
  EXPECT_EQ(code_of([] { compose_ext(BooleanFunction::parity(5), BlockMap::parity(2, 2), 2); }),
            ErrorCode::ShapeMismatch);
}
