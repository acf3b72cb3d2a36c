#include <gtest/gtest.h>

#include <optional>

#include "plab/descriptors.hpp"
#include "plab/error.hpp"

using namespace plab;
using desc::Json;

namespace {

std::optional<ErrorCode> code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

void expect_same_function(const BooleanFunction& a, const BooleanFunction& b) {
  ASSERT_EQ(a.arity(), b.arity());
  const std::uint64_t step = a.arity() > 16 ? 977 : 1;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << a.arity()); x += step) ASSERT_EQ(a(x), b(x)) << x;
}

void expect_same_generator(const Generator& a, const Generator& b) {
  ASSERT_EQ(a.seed_length(), b.seed_length());
  ASSERT_EQ(a.output_length(), b.output_length());
  ASSERT_EQ(a.descriptor().dump(), b.descriptor().dump());
  Rng rng(91);
  for (int t = 0; t < 300; ++t) {
    const auto s = random_bitvec(rng, a.seed_length());
    ASSERT_EQ(a(s), b(s));
  }
}

}  // namespace

TEST(Descriptors, FieldRoundTrip) {
  for (unsigned w : {1U, 2U, 8U, 9U, 31U}) {
    const auto f = gf2::FieldSpec::standard(w);
    EXPECT_EQ(desc::field_from_json(desc::field_to_json(f)), f);
  }
  EXPECT_EQ(desc::field_to_json(gf2::FieldSpec::standard(8))["modulus"], "11b");
  EXPECT_EQ(desc::field_from_json(Json{{"width", 2}}), gf2::FieldSpec::standard(2));
  EXPECT_EQ(code_of([] { desc::field_from_json(Json{{"width", 2}, {"modulus", "5"}}); }),
            ErrorCode::ReducibleModulus);
}

TEST(Descriptors, ModelsRoundTrip) {
  Rng rng(92);
  const auto b = random_2bp(2, 5, 10, rng);
  const auto b2 = desc::bp2_from_json(desc::bp2_to_json(b));
  expect_same_function(b.function(), b2.function());
  EXPECT_EQ(desc::bp2_to_json(b2), desc::bp2_to_json(b));

  const auto x = random_xor_of_juntas(10, 3, 4, rng);
  expect_same_function(x.function(), desc::xor_of_juntas_from_json(desc::xor_of_juntas_to_json(x)).function());

  const SparsePolyF2 p(6, {0b11, 0b100100, 0b1}, true);
  EXPECT_EQ(desc::poly_from_json(desc::poly_to_json(p)), p);

  const Partition q({{0, 3}, {1, 2}});
  EXPECT_EQ(desc::partition_from_json(desc::partition_to_json(q)).masks(), q.masks());

  const auto d = build_design(16, 25, 5, 1);
  EXPECT_EQ(desc::design_from_json(desc::design_to_json(d)).sets, d.sets);
}

TEST(Descriptors, FunctionFamilies) {
  expect_same_function(desc::function_from_json({{"family", "gip"}, {"m", 2}, {"k", 2}}), gip_function(2, 2));
  expect_same_function(desc::function_from_json({{"family", "rw"}, {"m", 2}, {"k", 2}, {"r", 2}}), rw_function(2, 2, 2));
  const auto f4 = gf2::FieldSpec::standard(2);
  expect_same_function(desc::function_from_json({{"family", "ffm"}, {"d", 3}, {"field", {{"width", 2}}}}),
                       ffm_function(3, f4));
  expect_same_function(
      desc::function_from_json({{"family", "extffm"}, {"d", 2}, {"block", 3}, {"seed", "011010"}, {"field", {{"width", 2}}}}),
      extffm_function(2, 3, BitVec::from_string("011010"), f4));
  expect_same_function(desc::function_from_json({{"family", "table"}, {"n", 2}, {"table", "0001"}}),
                       BooleanFunction::conjunction(2));
  expect_same_function(
      desc::function_from_json({{"family", "compose"},
                                {"outer", {{"family", "gip"}, {"m", 2}, {"k", 2}}},
                                {"ext", {{"kind", "parity"}, {"m", 2}, {"r", 2}}},
                                {"k", 2}}),
      rw_function(2, 2, 2));
  const auto maj = desc::function_from_json({{"family", "majority"}, {"n", 3}});
  EXPECT_TRUE(maj(0b011));
  EXPECT_FALSE(maj(0b100));
  EXPECT_EQ(code_of([] { desc::function_from_json({{"family", "nope"}}); }), ErrorCode::UnknownDescriptor);
  EXPECT_EQ(code_of([] { desc::function_from_json({{"family", "gip"}, {"m", 2}}); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { desc::function_from_json({{"family", "gip"}, {"m", "two"}, {"k", 2}}); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { desc::parse("{not json"); }), ErrorCode::ParseError);
}

TEST(Descriptors, ClassesRebuildFromTheirConfig) {
  const std::vector<AdversaryClass> classes = {
      AdversaryClass::juntas(5, 2), AdversaryClass::affine(4), AdversaryClass::nof_one_bit(1),
      AdversaryClass::set_multilinear(4, Partition({{0, 1}, {2, 3}}), 2),
      AdversaryClass::sparse_sampled(6, 2, 3, 10, 5)};
  for (const auto& c : classes) {
    const auto back = desc::class_from_json(c.config());
    ASSERT_EQ(back.size(), c.size()) << c.name();
    for (std::uint64_t i = 0; i < c.size(); i += 3) {
      expect_same_function(back.member(i), c.member(i));
      ASSERT_EQ(back.describe(i), c.describe(i));
    }
  }
}

TEST(Descriptors, GeneratorsRoundTripBitExactly) {
  const std::vector<Generator> gens = {
      Generator::identity(9),
      Generator::constant(8, 0x5a, 3),
      junta_prg(16, 2, 0.25),
      junta_prg(12, 1, 0.1, "parity"),
      junta_prg(20, 2, 0.25, "auto", {1.5, 0.0}),
      bp2_prg(14, 2, 4, 0.25),
      aw_prg(junta_prg(12, 2, 0.25), PseudorestrictionSampler(12, 2, 0.25), 2),
      aw_prg(junta_prg(12, 2, 0.25), PseudorestrictionSampler::all_star(12), 1),
  };
  for (const auto& g : gens) {
    const auto text = g.descriptor().dump();
    expect_same_generator(g, desc::generator_from_json(desc::parse(text)));
  }
}

TEST(Descriptors, TamperedNwDescriptorIsRejected) {
  auto d = junta_prg(16, 2, 0.25).descriptor();
  d["seed_len"] = 17;
  EXPECT_EQ(code_of([&] { desc::generator_from_json(d); }), ErrorCode::ParseError);
}

TEST(Descriptors, NwCustomMatchesNwGenerate) {
  const Json j = {{"kind", "nw_custom"},
                  {"h", {{"family", "parity"}, {"n", 2}}},
                  {"design", {{"universe", 4}, {"set_size", 2}, {"max_intersection", 0}, {"sets", {{0, 1}, {2, 3}}}}}};
  const auto g = desc::generator_from_json(j);
  EXPECT_EQ(g(BitVec::from_string("1011")).to_string(), "10");
  EXPECT_EQ(g.eval_word(0b1101), 0b01U);
  expect_same_generator(g, desc::generator_from_json(g.descriptor()));
}

TEST(Descriptors, CorrReportJson) {
  const auto r = corr_exact(BooleanFunction::dictator(2, 0), BooleanFunction::conjunction(2));
  const auto j = desc::corr_report_to_json(r);
  EXPECT_EQ(j["value"], 0.5);
  EXPECT_EQ(j["mode"], "exact");
  EXPECT_EQ(j["radius"], 0.0);
  EXPECT_EQ(j["numerator"], 2);
  const auto m = corr_class_max(BooleanFunction::parity(3), AdversaryClass::affine(3));
  const auto jm = desc::corr_report_to_json(m);
  EXPECT_EQ(jm["value"], 1.0);
  EXPECT_TRUE(jm.contains("argmax_descriptor"));
}

TEST(Descriptors, Distributions) {
  EXPECT_EQ(tv_distance(desc::distribution_from_string("uniform:1", 0), desc::distribution_from_string("point:0", 1)),
            0.5);
  EXPECT_EQ(desc::distribution_from_string("point:3:5", 0).counts[5], 1U);
  EXPECT_EQ(desc::distribution_from_json(Json{{"bits", 1}, {"counts", {3, 1}}}).total(), 4U);
  EXPECT_EQ(code_of([] { desc::distribution_from_string("gauss:1", 0); }), ErrorCode::ParseError);
}
