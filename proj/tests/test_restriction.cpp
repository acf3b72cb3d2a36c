#include <gtest/gtest.h>

#include <cmath>

#include "plab/error.hpp"
#include "plab/restriction.hpp"

using namespace plab;

TEST(SampleRp, Extremes) {
  Rng rng(1);
  EXPECT_EQ(sample_rp(20, 1.0, rng).alive_count(), 20U);
  const auto r = sample_rp(2000, 0.0, rng);
  EXPECT_EQ(r.alive_count(), 0U);
  std::size_t ones = 0;
  for (std::size_t i = 0; i < r.size(); ++i) ones += r[i] == Cell::One;
  EXPECT_NEAR(static_cast<double>(ones), 1000.0, 5 * std::sqrt(500.0));
}

TEST(SampleRp, StarFractionConcentrates) {
  Rng rng(2);
  const auto r = sample_rp(10000, 0.5, rng);
  EXPECT_NEAR(static_cast<double>(r.alive_count()), 5000.0, 5 * 50.0);
}

TEST(SampleRp, InvalidProbability) {
  Rng rng(3);
  try {
    sample_rp(4, 1.5, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidProbability);
  }
}

TEST(Compose, Examples) {
  const auto rho = Restriction::parse("10*1*");
  EXPECT_EQ(compose(rho, Restriction(5)), rho);
  EXPECT_EQ(compose(Restriction(5), rho), rho);
  EXPECT_EQ(compose(Restriction::parse("1**"), Restriction::parse("00*")).to_string(), "10*");
  EXPECT_THROW(compose(Restriction(2), Restriction(3)), Error);
}

TEST(Compose, AssociativeAndAliveIntersects) {
  Rng rng(4);
  for (int t = 0; t < 500; ++t) {
    const auto a = sample_rp(32, 0.5, rng), b = sample_rp(32, 0.5, rng), c = sample_rp(32, 0.5, rng);
    ASSERT_EQ(compose(a, compose(b, c)), compose(compose(a, b), c));
    ASSERT_EQ(compose(a, b).star_mask(), a.star_mask() & b.star_mask());
  }
}

TEST(Apply, Examples) {
  const auto f = BooleanFunction::parity(2);
  const auto g = apply(f, Restriction::parse("1*"));
  for (std::uint64_t x = 0; x < 4; ++x) EXPECT_EQ(g(x), !((x >> 1) & 1U));
  const auto h = apply(f, Restriction(2));
  for (std::uint64_t x = 0; x < 4; ++x) EXPECT_EQ(h(x), f(x));
  EXPECT_THROW(apply(f, Restriction(3)), Error);
}

TEST(Apply, MatchesSubstitutionAndIgnoresFixedCoordinates) {
  Rng rng(5);
  for (unsigned n = 1; n <= 10; ++n) {
    TruthTable t(n);
    for (std::uint64_t x = 0; x < t.size(); ++x) t.set(x, rng() & 1U);
    const auto f = BooleanFunction::from_table(t);
    const auto rho = sample_rp(n, 0.4, rng);
    const auto g = apply(f, rho).materialize();
    for (std::uint64_t x = 0; x < t.size(); ++x) {
      std::uint64_t y = 0;
      for (unsigned i = 0; i < n; ++i) {
        const bool bit = rho[i] == Cell::Star ? ((x >> i) & 1U) : rho[i] == Cell::One;
        y |= static_cast<std::uint64_t>(bit) << i;
      }
      ASSERT_EQ(g(x), t[y]);
      for (unsigned i = 0; i < n; ++i)
        if (rho[i] != Cell::Star) ASSERT_EQ(g(x), g(x ^ (std::uint64_t{1} << i)));
    }
  }
}

TEST(StarMerge, Examples) {
  const auto x = BitVec::from_string("101");
  EXPECT_EQ(star_merge(x, BitVec(3)).to_string(), "101");
  EXPECT_EQ(star_merge(x, BitVec::from_string("111")).to_string(), "***");
  EXPECT_EQ(star_merge(x, BitVec::from_string("010")).to_string(), "1*1");
  EXPECT_THROW(star_merge(x, BitVec(2)), Error);
}

TEST(StarMerge, AliveCountIsWeightOfY) {
  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    const auto u = random_bitvec(rng, 40), z = random_bitvec(rng, 40);
    ASSERT_EQ(star_merge(u, z).alive_count(), z.weight());
  }
}

TEST(RestrictionText, ParseAndMasks) {
  const auto r = Restriction::parse("0*1*");
  EXPECT_EQ(r.alive(), (std::vector<unsigned>{1, 3}));
  EXPECT_EQ(r.star_mask(), 0b1010U);
  EXPECT_EQ(r.value_mask(), 0b0100U);
  EXPECT_EQ(Restriction::from_masks(4, 0b1010, 0b0100), r);
  EXPECT_THROW(Restriction::parse("01x"), Error);
}
