#include <gtest/gtest.h>

#include <cmath>
#include <optional>
#include <set>

#include "oracles/bp_oracle.hpp"
#include "plab/corrlab.hpp"
#include "plab/error.hpp"
#include "plab/hardfn.hpp"

using namespace plab;

namespace {

std::optional<ErrorCode> code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

BooleanFunction random_function(unsigned n, Rng& rng) {
  TruthTable t(n);
  for (std::uint64_t x = 0; x < t.size(); ++x) t.set(x, rng() & 1U);
  return BooleanFunction::from_table(t);
}

std::vector<bool> table_of(const BooleanFunction& f) {
  std::vector<bool> v(std::size_t{1} << f.arity());
  for (std::uint64_t x = 0; x < v.size(); ++x) v[x] = f(x);
  return v;
}

// R_2 by the cube definition, straight from four nested loops.
double r2_oracle(const BooleanFunction& f, unsigned b) {
  const std::uint64_t m = std::uint64_t{1} << b;
  std::int64_t sum = 0;
  for (std::uint64_t x0 = 0; x0 < m; ++x0)
    for (std::uint64_t x1 = 0; x1 < m; ++x1)
      for (std::uint64_t y0 = 0; y0 < m; ++y0)
        for (std::uint64_t y1 = 0; y1 < m; ++y1) {
          const int e = f(x0 | (y0 << b)) ^ f(x0 | (y1 << b)) ^ f(x1 | (y0 << b)) ^ f(x1 | (y1 << b));
          sum += e ? -1 : 1;
        }
  return static_cast<double>(sum) / static_cast<double>(m * m * m * m);
}

}  // namespace

TEST(Corr, Examples) {
  const auto x1 = BooleanFunction::dictator(2, 0), and2 = BooleanFunction::conjunction(2);
  EXPECT_EQ(corr_exact(x1, x1).value, 1.0);
  EXPECT_EQ(corr_exact(x1, and2).value, 0.5);
  EXPECT_EQ(corr_exact(x1, and2).numerator, 2);
  EXPECT_EQ(corr_exact(x1, and2).denominator, 4U);
  const BooleanFunction and12(3, [](std::uint64_t x) { return (x & 3U) == 3U; });
  EXPECT_EQ(corr_exact(BooleanFunction::parity(3), and12).value, 0.0);
  EXPECT_EQ(corr_exact(x1, x1).mode, Mode::Exact);
  EXPECT_EQ(corr_exact(x1, x1).radius, 0.0);
  EXPECT_EQ(code_of([] { corr_exact(BooleanFunction::parity(29), BooleanFunction::parity(29)); }),
            ErrorCode::ArityTooLarge);
}

TEST(Corr, SymmetryAndNegation) {
  Rng rng(71);
  for (int t = 0; t < 30; ++t) {
    const auto f = random_function(8, rng), g = random_function(8, rng);
    ASSERT_EQ(corr_exact(f, g).numerator, corr_exact(g, f).numerator);
    ASSERT_EQ(corr_exact(f, g.negated()).value, corr_exact(f, g).value);
  }
}

TEST(Corr, MonteCarloIdenticalIsExactlyOne) {
  Rng rng(72);
  const auto f = random_function(10, rng);
  EXPECT_EQ(corr_mc(f, f, 17, rng).value, 1.0);
  EXPECT_EQ(corr_mc(f, f, 17, rng).mode, Mode::MonteCarlo);
  EXPECT_DOUBLE_EQ(hoeffding_radius99(1000), std::sqrt(2.0 * std::log(200.0) / 1000.0));
}

TEST(Corr, MonteCarloWithinRadiusOfExact) {
  Rng rng(73);
  unsigned inside = 0;
  const unsigned trials = 1000;
  const auto f = random_function(12, rng);
  for (unsigned t = 0; t < trials; ++t) {
    // A correlated partner so the true value is not just zero.
    const BooleanFunction g(12, [f, t](std::uint64_t x) { return ((x * 2654435761U + t) % 5 == 0) != f(x); });
    const auto exact = corr_exact(f, g);
    const auto mc = corr_mc(f, g, 2000, rng);
    inside += std::abs(mc.value - exact.value) <= mc.radius;
  }
  EXPECT_GE(inside * 100, trials * 99);
}

TEST(Classes, JuntasAreDuplicateFreeAndComplete) {
  for (unsigned n : {3U, 4U})
    for (unsigned w : {1U, 2U}) {
      std::set<std::vector<bool>> want;
      for (std::uint64_t support = 0; support < (std::uint64_t{1} << n); ++support) {
        if (std::popcount(support) > static_cast<int>(w)) continue;
        std::vector<unsigned> vars;
        for (unsigned i = 0; i < n; ++i)
          if ((support >> i) & 1U) vars.push_back(i);
        for (std::uint64_t tab = 0; tab < (std::uint64_t{1} << (1U << vars.size())); ++tab) {
          std::vector<bool> v(std::size_t{1} << n);
          for (std::uint64_t x = 0; x < v.size(); ++x) {
            std::uint64_t idx = 0;
            for (std::size_t j = 0; j < vars.size(); ++j) idx |= ((x >> vars[j]) & 1U) << j;
            v[x] = (tab >> idx) & 1U;
          }
          want.insert(v);
        }
      }
      const auto c = AdversaryClass::juntas(n, w);
      std::set<std::vector<bool>> got;
      for (std::uint64_t i = 0; i < c.size(); ++i) got.insert(table_of(c.member(i)));
      EXPECT_EQ(got.size(), c.size()) << n << " " << w;
      EXPECT_EQ(got, want) << n << " " << w;
    }
  EXPECT_EQ(AdversaryClass::juntas(3, 2).size(), 38U);
}

TEST(Classes, AffineAndNof) {
  const auto a = AdversaryClass::affine(4);
  EXPECT_EQ(a.size(), 32U);
  std::set<std::vector<bool>> seen;
  for (std::uint64_t i = 0; i < a.size(); ++i) seen.insert(table_of(a.member(i)));
  EXPECT_EQ(seen.size(), 32U);
  const auto nof = AdversaryClass::nof_one_bit(1);
  EXPECT_EQ(nof.size(), 6U);
  EXPECT_EQ(nof.arity(), 2U);
}

TEST(Classes, SetMultilinearMembersAreSetMultilinear) {
  const Partition p({{0, 1}, {2, 3}});
  const auto lin = AdversaryClass::set_multilinear(4, p, 2);
  EXPECT_EQ(lin.size(), 32U);
  const auto quad = AdversaryClass::set_multilinear(4, p, 3);
  EXPECT_EQ(quad.size(), 512U);
  for (std::uint64_t i = 0; i < quad.size(); i += 7) {
    const auto poly = anf(quad.member(i));
    ASSERT_TRUE(is_set_multilinear(poly, p));
    ASSERT_LT(poly.degree(), 3U);
  }
  EXPECT_EQ(code_of([&] { AdversaryClass::set_multilinear(4, p, 3, 100); }), ErrorCode::BudgetExceeded);
}

TEST(ClassMax, Examples) {
  Rng rng(74);
  const auto g = random_function(6, rng);
  const auto pair = AdversaryClass::list("pair", {g, g.negated()});
  EXPECT_EQ(corr_class_max(g.negated(), pair).value, 1.0);
  for (unsigned n = 4; n <= 8; ++n)
    EXPECT_EQ(corr_class_max(BooleanFunction::parity(n), AdversaryClass::juntas(n, std::min(3U, n - 1))).value, 0.0);
  const auto f4 = gf2::FieldSpec::standard(2);
  const auto r = corr_class_max(ffm_function(2, f4), AdversaryClass::affine(4));
  EXPECT_EQ(r.numerator * 4, static_cast<std::int64_t>(r.denominator));
  EXPECT_TRUE(r.argmax.has_value());
  EXPECT_EQ(code_of([] { corr_class_max(BooleanFunction::parity(8), AdversaryClass::affine(8), {}, 1000); }),
            ErrorCode::BudgetExceeded);
}

TEST(Norm, Examples) {
  EXPECT_EQ(kparty_norm(BooleanFunction::constant(2, false), 2, 1).value, 1.0);
  EXPECT_EQ(kparty_norm(BooleanFunction::dictator(2, 0), 2, 1).value, 1.0);
  EXPECT_EQ(kparty_norm(BooleanFunction::conjunction(2), 2, 1).value, 0.5);
  EXPECT_EQ(code_of([] { kparty_norm(BooleanFunction::parity(14), 2, 7); }), ErrorCode::ArityTooLarge);
  const auto mc = kparty_norm(BooleanFunction::parity(14), 2, 7, {}, 1000, 5);
  EXPECT_EQ(mc.mode, Mode::MonteCarlo);
  EXPECT_EQ(mc.value, 1.0);
}

TEST(Norm, MatchesCubeOracle) {
  Rng rng(75);
  for (unsigned b = 1; b <= 3; ++b)
    for (int t = 0; t < 10; ++t) {
      const auto f = random_function(2 * b, rng);
      ASSERT_DOUBLE_EQ(kparty_norm(f, 2, b).value, std::abs(r2_oracle(f, b)));
    }
}

TEST(Norm, SandwichForInnerProduct) {
  const auto nof = AdversaryClass::nof_one_bit(1);
  const auto ip = BooleanFunction::conjunction(2);
  const double r2 = kparty_norm(ip, 2, 1).value;
  const double c = corr_class_max(ip, nof).value;
  EXPECT_EQ(r2, 0.5);
  EXPECT_EQ(c, 0.5);
  EXPECT_LE(r2, c);
  EXPECT_LE(c, 2.0 * std::pow(r2, 0.25));
}

TEST(Norm, UpperSideHoldsForEveryTwoBitFunction) {
  const auto nof = AdversaryClass::nof_one_bit(1);
  for (std::uint64_t tab = 0; tab < 16; ++tab) {
    TruthTable t(2);
    for (unsigned x = 0; x < 4; ++x) t.set(x, (tab >> x) & 1U);
    const auto f = BooleanFunction::from_table(t);
    ASSERT_LE(corr_class_max(f, nof).value, 2.0 * std::pow(kparty_norm(f, 2, 1).value, 0.25) + 1e-12) << tab;
  }
}

TEST(Norm, LowerSideIsNotUniversal) {
  // x XOR y has R_2 = 1 yet no single message bit correlates with it.
  const auto x = BooleanFunction::parity(2);
  EXPECT_EQ(kparty_norm(x, 2, 1).value, 1.0);
  EXPECT_EQ(corr_class_max(x, AdversaryClass::nof_one_bit(1)).value, 0.0);
}

TEST(Fooling, Examples) {
  Rng rng(77);
  const auto f = random_function(8, rng);
  EXPECT_EQ(fooling_error(Generator::identity(8), f).value, 0.0);
  EXPECT_EQ(fooling_error(Generator::constant(8, 0), BooleanFunction::dictator(8, 0)).value, 1.0);
  Design disjoint{8, 2, 0, {0b11, 0b1100, 0b110000, 0b11000000}};
  const auto h = BooleanFunction::parity(2);
  const Generator nw(8, 4, {{"kind", "test"}}, [=](const BitVec& s) { return nw_generate(h, disjoint, s); });
  for (unsigned i = 0; i < 4; ++i) EXPECT_EQ(fooling_error(nw, BooleanFunction::dictator(4, i)).value, 0.0);
}

TEST(Fooling, WorkerCountInvariant) {
  Rng rng(78);
  const auto g = junta_prg(16, 2, 0.25);
  for (int t = 0; t < 3; ++t) {
    const auto f = random_function(16, rng);
    const auto a = fooling_error(g, f, ExecPolicy{1}), b = fooling_error(g, f, ExecPolicy{3});
    ASSERT_EQ(a.numerator, b.numerator);
    ASSERT_EQ(a.denominator, b.denominator);
  }
}

TEST(Tv, Examples) {
  EXPECT_EQ(tv_distance(Distribution::uniform(3), Distribution::uniform(3)), 0.0);
  EXPECT_EQ(tv_distance(Distribution::uniform(1), Distribution::point(1, 1)), 0.5);
  EXPECT_EQ(code_of([] { tv_distance(Distribution::uniform(1), Distribution::uniform(2)); }),
            ErrorCode::SupportMismatch);
}

TEST(Anf, RoundTrip) {
  Rng rng(79);
  EXPECT_EQ(anf(BooleanFunction::conjunction(2)), SparsePolyF2(2, {0b11}));
  EXPECT_EQ(anf(BooleanFunction::parity(3)), SparsePolyF2(3, {1, 2, 4}));
  for (int t = 0; t < 20; ++t) {
    const auto f = random_function(7, rng);
    const auto p = anf(f);
    for (std::uint64_t x = 0; x < 128; ++x) ASSERT_EQ(p(x), f(x));
  }
}

TEST(ExtFfmBound, BoundFormulaAndAffineCheck) {
  EXPECT_DOUBLE_EQ(extffm_corr_bound(2, 4, 0.5), 1.0 + (1.0 / 4 + 0.5));
  for (unsigned block : {2U, 3U}) {
    const auto spec = gf2::FieldSpec::standard(block);
    const unsigned n = 2 * block, total = n + 2 * block;
    std::vector<unsigned> x1, x2, w;
    for (unsigned i = 0; i < block; ++i) x1.push_back(i);
    for (unsigned i = block; i < n; ++i) x2.push_back(i);
    for (unsigned i = n; i < total; ++i) w.push_back(i);
    const Partition parts({x1, x2, w});
    const auto res = check_extffm_bound(2, block, 1.0, spec, block, parts, AdversaryClass::affine(total));
    EXPECT_TRUE(res.pass);
    EXPECT_TRUE(res.vacuous);
    EXPECT_LE(res.measured, res.bound);
  }
}

TEST(ExtFfmBound, ClassContainingExtFfmIsRejected) {
  const auto spec = gf2::FieldSpec::standard(2);
  const auto self = extffm_seeded_function(2, 2, spec);
  const Partition parts({{0, 1}, {2, 3}, {4, 5, 6, 7}});
  EXPECT_EQ(code_of([&] {
              check_extffm_bound(2, 2, 1.0, spec, 2, parts, AdversaryClass::list("self", {self}));
            }),
            ErrorCode::HypothesisViolation);
}

TEST(AliveSets, AliveSetsKeepRestrictionsSetMultilinear) {
  const Partition parts({{0, 2, 4}, {1, 3, 5, 6}, {7}});
  const auto alive = set_multilinear_alive_sets(8, 2, parts);
  ASSERT_EQ(alive.size(), 2U);
  EXPECT_EQ(alive[0], (std::vector<unsigned>{0, 2}));  // tie with {1, 3}: first part wins
  EXPECT_EQ(alive[1], (std::vector<unsigned>{5, 6}));
  // A polynomial set-multilinear over `parts`, restricted to the alive sets, is
  // set-multilinear over the blocks X_1, X_2.
  Rng rng(80);
  const Partition halves = Partition::contiguous(8, 2);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::uint64_t> mons;
    for (int j = 0; j < 4; ++j) {
      std::uint64_t m = 0;
      for (const auto& blk : parts.blocks())
        if (rng() & 1U) m |= std::uint64_t{1} << blk[uniform_below(rng, blk.size())];
      mons.push_back(m);
    }
    const SparsePolyF2 p(8, mons);
    ASSERT_TRUE(is_set_multilinear(p, parts));
    Restriction rho(8);
    std::uint64_t keep = 0;
    for (const auto& s : alive)
      for (unsigned v : s) keep |= std::uint64_t{1} << v;
    for (unsigned i = 0; i < 8; ++i)
      if (!((keep >> i) & 1U)) rho.set(i, (rng() & 1U) ? Cell::One : Cell::Zero);
    ASSERT_TRUE(is_set_multilinear(restrict_poly(p, rho), halves));
  }
}

TEST(Lifting, SmallProgramsSatisfyTheBound) {
  Rng rng(81);
  const auto g = bp2_prg(14, 2, 4, 0.25);
  for (int t = 0; t < 5; ++t) {
    const auto b = random_2bp(2, 4, 14, rng);
    for (std::uint64_t x = 0; x < 16384; x += 97) ASSERT_EQ(b(x), oracle::run_2bp(b, oracle::bits(x, 14)) == 1);
    const auto rep = bp2_lifting_check(g, b);
    EXPECT_TRUE(rep.pass);
    EXPECT_LE(rep.gap, rep.bound + 1e-12);
  }
}
