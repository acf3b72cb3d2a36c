#include <gtest/gtest.h>

#include "plab/bitvec.hpp"
#include "plab/error.hpp"
#include "plab/random.hpp"

using plab::BitVec;

TEST(BitVec, StringRoundTripIsIndexZeroFirst) {
  const auto v = BitVec::from_string("1101");
  EXPECT_EQ(v.size(), 4U);
  EXPECT_TRUE(v.get(0));
  EXPECT_TRUE(v.get(1));
  EXPECT_FALSE(v.get(2));
  EXPECT_EQ(v.word(), 0b1011U);
  EXPECT_EQ(v.to_string(), "1101");
}

TEST(BitVec, HexIsNumericWithBitZeroLeast) {
  const auto v = BitVec::from_hex("53", 8);
  EXPECT_EQ(v.word(), 0x53U);
  EXPECT_EQ(v.to_hex(), "53");
  EXPECT_EQ(BitVec::from_hex("1b", 9).word(), 0x1bU);
}

TEST(BitVec, RejectsBadCharacters) {
  EXPECT_THROW(BitVec::from_string("10x"), plab::Error);
  EXPECT_THROW(BitVec::from_hex("zz", 8), plab::Error);
}

TEST(BitVec, ExtractDepositAcrossWords) {
  plab::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t size = 1 + plab::uniform_below(rng, 200);
    auto v = plab::random_bitvec(rng, size);
    const std::size_t off = plab::uniform_below(rng, size);
    const auto count = static_cast<unsigned>(std::min<std::size_t>(64, size - off));
    const auto w = v.extract(off, count);
    for (unsigned i = 0; i < count; ++i) ASSERT_EQ(((w >> i) & 1U) != 0, v.get(off + i));
    BitVec u(size);
    u.deposit(off, count, w);
    for (unsigned i = 0; i < count; ++i) ASSERT_EQ(u.get(off + i), v.get(off + i));
  }
}

TEST(BitVec, SliceConcatXorWeight) {
  const auto a = BitVec::from_string("10110");
  const auto b = BitVec::from_string("011");
  const auto c = a.concat(b);
  EXPECT_EQ(c.to_string(), "10110011");
  EXPECT_EQ(c.slice(3, 4).to_string(), "1001");
  EXPECT_EQ(c.weight(), 5U);
  EXPECT_EQ((a ^ BitVec::from_string("11111")).to_string(), "01001");
}

TEST(BitVec, GatherBits) {
  const std::vector<unsigned> pos{3, 0, 5};
  EXPECT_EQ(plab::gather_bits(0b101000U, pos), 0b101U);
  EXPECT_EQ(plab::gather_bits(0b000001U, pos), 0b010U);
}
