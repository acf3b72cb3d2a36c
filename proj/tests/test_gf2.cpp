#include <gtest/gtest.h>

#include <algorithm>

#include "oracles/field_oracle.hpp"
#include "plab/error.hpp"
#include "plab/gf2.hpp"
#include "plab/random.hpp"

using namespace plab;
using namespace plab::gf2;

namespace {

FieldSpec f4() { return FieldSpec::from_poly(2, 0b111); }
FieldSpec f256() { return FieldSpec::from_poly(8, 0x11b); }

}  // namespace

TEST(FieldNew, AcceptsIrreducible) {
  EXPECT_NO_THROW(f4());
  EXPECT_NO_THROW(f256());
  EXPECT_EQ(f256().reduction(), 0x1bU);
}

TEST(FieldNew, RejectsReducible) {
  try {
    FieldSpec::from_poly(2, 0b101);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ReducibleModulus);
  }
}

TEST(FieldNew, RejectsDegreeMismatch) {
  try {
    FieldSpec::create(3, BitVec::from_string("1101"));  // 1 + x + x^3 read index-0-first, ok
  } catch (...) {
    FAIL();
  }
  try {
    FieldSpec::create(3, BitVec::from_string("1100"));  // degree 1
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
}

TEST(FieldNew, DefaultTableMatchesTrialDivision) {
  for (unsigned w = 1; w <= 16; ++w) {
    const auto low = default_reduction(w);
    EXPECT_TRUE(is_irreducible(w, low)) << w;
    for (std::uint64_t smaller = 0; smaller < low; ++smaller) EXPECT_FALSE(is_irreducible(w, smaller)) << w;
  }
  EXPECT_EQ(FieldSpec::standard(8).reduction(), 0x1bU);
  EXPECT_EQ(FieldSpec::standard(64).reduction(), 0x1bU);
}

TEST(FieldNew, WideWidthsAgreeWithTrialDivisionOracle) {
  // Above the trial-division cutoff the library switches algorithms.
  Rng rng(11);
  for (unsigned w : {25U, 26U}) {
    unsigned irreducible = 0;
    for (int t = 0; t < 40; ++t) {
      const std::uint64_t low = (rng() & low_mask(w)) | 1U;
      const auto f = oracle::from_bits((std::uint64_t{1} << w) | low, w + 1);
      bool want = true;
      for (std::uint64_t g = 2; g < (std::uint64_t{1} << (w / 2 + 1)) && want; ++g)
        want = oracle::degree(oracle::remainder(f, oracle::from_bits(g, w / 2 + 1))) >= 0;
      ASSERT_EQ(is_irreducible(w, low), want) << w << " " << low;
      irreducible += want;
    }
    EXPECT_GT(irreducible, 0U);
  }
}

TEST(GfAdd, Examples) {
  const auto F = f4();
  const FieldElement a(F, 0b10), b(F, 0b11);
  EXPECT_EQ(gf_add(a, FieldElement::zero(F)), a);
  EXPECT_EQ(gf_add(a, a), FieldElement::zero(F));
  EXPECT_EQ(gf_add(a, b).bits(), 0b01U);
}

TEST(GfMul, Examples) {
  const auto F = f4();
  const FieldElement x(F, 0b10);
  EXPECT_EQ(gf_mul(x, FieldElement::one(F)), x);
  EXPECT_EQ(gf_mul(x, x).bits(), 0b11U);
  EXPECT_EQ(f256().mul(0x53, 0xca), oracle::field_mul(0x53, 0xca, 0x11b, 8));
  EXPECT_EQ(f256().mul(0x53, 0xca), 0x01U);
}

TEST(GfMul, SpecMismatch) {
  try {
    gf_mul(FieldElement(f4(), 1), FieldElement(f256(), 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SpecMismatch);
  }
}

TEST(GfMul, ElementTooWide) {
  EXPECT_THROW(FieldElement(f4(), 0b100), Error);
}

TEST(GfMul, OracleOnAllOfF256) {
  const auto F = f256();
  for (std::uint64_t a = 0; a < 256; ++a)
    for (std::uint64_t b = 0; b < 256; ++b) {
      const auto want = oracle::field_mul(a, b, 0x11b, 8);
      ASSERT_EQ(F.mul(a, b), want) << a << "*" << b;
      ASSERT_EQ(F.mul_reference(a, b), want);
    }
}

TEST(GfMul, WideFieldsAgreeWithReference) {
  for (unsigned w : {13U, 31U, 32U, 33U, 63U, 64U}) {
    const auto F = FieldSpec::standard(w);
    Rng rng(w);
    for (int i = 0; i < 2000; ++i) {
      const auto a = rng() & F.element_mask();
      const auto b = rng() & F.element_mask();
      ASSERT_EQ(F.mul(a, b), F.mul_reference(a, b)) << w;
    }
  }
}

TEST(FieldAxioms, ExhaustiveF4AndF16) {
  for (unsigned w : {2U, 4U}) {
    const auto F = FieldSpec::standard(w);
    const std::uint64_t q = F.size();
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b < q; ++b) {
        ASSERT_EQ(F.mul(a, b), F.mul(b, a));
        for (std::uint64_t c = 0; c < q; ++c) {
          ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
          ASSERT_EQ(F.mul(a, b ^ c), F.mul(a, b) ^ F.mul(a, c));
        }
      }
  }
}

TEST(FieldAxioms, InversesExistUpToWidth8) {
  for (unsigned w = 1; w <= 8; ++w) {
    const auto F = FieldSpec::standard(w);
    for (std::uint64_t a = 1; a < F.size(); ++a) {
      unsigned inverses = 0;
      for (std::uint64_t b = 1; b < F.size(); ++b) inverses += F.mul(a, b) == 1;
      ASSERT_EQ(inverses, 1U) << "w=" << w << " a=" << a;
    }
  }
}

TEST(FieldAxioms, PowMatchesRepeatedMultiplication) {
  const auto F = f256();
  for (std::uint64_t a = 0; a < 256; a += 7) {
    std::uint64_t acc = 1;
    for (std::uint64_t e = 0; e < 20; ++e) {
      ASSERT_EQ(F.pow(a, e), acc);
      acc = F.mul(acc, a);
    }
    if (a != 0) ASSERT_EQ(F.pow(a, 255), 1U);
  }
}

TEST(Lsb, Examples) {
  const auto F = f4();
  EXPECT_TRUE(lsb(FieldElement(F, 0b01)));
  EXPECT_FALSE(lsb(FieldElement(F, 0b10)));
  EXPECT_FALSE(lsb(FieldElement::zero(F)));
}

TEST(InnerProduct, Examples) {
  EXPECT_FALSE(inner_product(BitVec::from_string("1011"), BitVec(4)));
  EXPECT_FALSE(inner_product(BitVec::from_string("11"), BitVec::from_string("11")));
  EXPECT_TRUE(inner_product(BitVec::from_string("101"), BitVec::from_string("110")));
  EXPECT_THROW(inner_product(BitVec(3), BitVec(4)), Error);
}

TEST(Character, Examples) {
  const auto F = f4();
  for (std::uint64_t x = 0; x < 4; ++x) {
    EXPECT_FALSE(character(FieldElement::zero(F), FieldElement(F, x)));
    EXPECT_EQ(character(FieldElement::one(F), FieldElement(F, x)), (x & 1U) != 0);
  }
  EXPECT_TRUE(character(FieldElement(F, 0b10), FieldElement(F, 0b11)));
}

TEST(Character, AdditiveAndBalancedUpToWidth8) {
  for (unsigned w = 1; w <= 8; ++w) {
    const auto F = FieldSpec::standard(w);
    for (std::uint64_t c = 0; c < F.size(); ++c) {
      const FieldElement ce(F, c);
      std::uint64_t ones = 0;
      for (std::uint64_t a = 0; a < F.size(); ++a) {
        const bool ca = character(ce, FieldElement(F, a));
        ones += ca;
        for (std::uint64_t b = 0; b < F.size(); ++b)
          ASSERT_EQ(character(ce, FieldElement(F, a ^ b)), ca != character(ce, FieldElement(F, b)));
      }
      if (c != 0) ASSERT_EQ(ones, F.size() / 2) << "w=" << w << " c=" << c;
    }
  }
}

TEST(Character, InnerFormEnumeratesSameSet) {
  // Both forms give 2^w distinct linear functionals on F_16.
  const auto F = FieldSpec::standard(4);
  std::vector<std::uint64_t> a, b;
  for (std::uint64_t c = 0; c < 16; ++c) {
    std::uint64_t ta = 0, tb = 0;
    for (std::uint64_t x = 0; x < 16; ++x) {
      ta |= static_cast<std::uint64_t>(character(FieldElement(F, c), FieldElement(F, x))) << x;
      tb |= static_cast<std::uint64_t>(character_inner(FieldElement(F, c), FieldElement(F, x))) << x;
    }
    a.push_back(ta);
    b.push_back(tb);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}
