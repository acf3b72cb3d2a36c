#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "plab/bitvec.hpp"
#include "plab/boolean_function.hpp"
#include "plab/extractors.hpp"
#include "plab/restriction.hpp"

namespace plab {

/// Sets of size r over a universe of s <= 64 points, pairwise intersections <= k.
struct Design {
  unsigned universe = 0;
  unsigned set_size = 0;
  unsigned max_intersection = 0;
  std::vector<std::uint64_t> sets;

  /// Members of set i in ascending order.
  std::vector<unsigned> members(std::size_t i) const;
  /// Throws ShapeMismatch if a set has the wrong size or two sets overlap too much.
  void check() const;
};

/// Candidate r-subsets examined before build_design gives up.
inline constexpr std::uint64_t kDesignCandidateBudget = 50'000'000;

/// Disjoint consecutive blocks when count * r <= s; otherwise greedy over
/// r-subsets of [s] in lexicographic order. Throws Infeasible.
Design build_design(unsigned count, unsigned universe, unsigned set_size, unsigned max_intersection);

/// Output bit i = h(seed restricted to set i, ascending).
BitVec nw_generate(const BooleanFunction& h, const Design& design, const BitVec& seed);

/// A seeded map {0,1}^s -> {0,1}^n with a descriptor that rebuilds it.
class Generator {
 public:
  using Fn = std::function<BitVec(const BitVec&)>;
  using WordFn = std::function<std::uint64_t(std::uint64_t)>;

  Generator(unsigned seed_length, unsigned output_length, nlohmann::ordered_json descriptor, Fn fn,
            WordFn word = nullptr);

  static Generator identity(unsigned n);
  static Generator constant(unsigned n, std::uint64_t value, unsigned seed_length = 0);

  unsigned seed_length() const noexcept { return seed_len_; }
  unsigned output_length() const noexcept { return out_len_; }
  const nlohmann::ordered_json& descriptor() const noexcept { return descriptor_; }

  BitVec operator()(const BitVec& seed) const;
  /// Seed and output as words; requires both lengths <= 64.
  std::uint64_t eval_word(std::uint64_t seed) const;

 private:
  unsigned seed_len_;
  unsigned out_len_;
  nlohmann::ordered_json descriptor_;
  Fn fn_;
  WordFn word_;
};

/// Named knobs for the asymptotic junta-PRG recipe.
struct JuntaPrgConstants {
  double C = 1.0;  ///< multiplier on d * log2(1/eps)
  double c = 0.0;  ///< exponent in 2^{c sqrt(log2 n)}
};

/// Shape of the junta PRG before the design search.
struct JuntaPrgShape {
  unsigned r_raw = 0;         ///< ceil(d C log2(1/eps) 2^{c sqrt(log2 n)})
  unsigned parity_block = 0;  ///< d * ceil(log2 n)
  unsigned r = 0;             ///< r_raw rounded up to a multiple of parity_block
  unsigned blocks = 0;        ///< r / parity_block
  unsigned k = 0;             ///< design intersection bound ceil(log2 n)
};

JuntaPrgShape junta_prg_shape(unsigned n, unsigned d, double eps, const JuntaPrgConstants& constants);

/// The outer function h on `blocks` parity bits: "parity", "ip" (inner
/// product of pairs XOR a leftover bit) or "auto" (parity for one block, ip otherwise).
BooleanFunction junta_prg_outer(const std::string& family, unsigned blocks);

/// NW over h o XOR: r-bit sets, intersections <= k, universe the smallest s
/// for which the greedy design exists. Throws Infeasible.
Generator junta_prg(unsigned n, unsigned d, double eps, const std::string& hard = "auto",
                    const JuntaPrgConstants& constants = {});

/// eps' = eps / ((t + 1) / 2), then the junta PRG.
double bp2_eps_prime(double eps, unsigned t);
Generator bp2_prg(unsigned n, unsigned d, unsigned t, double eps, const std::string& hard = "auto",
                  const JuntaPrgConstants& constants = {});

struct PseudorestrictionConfig {
  double c_ell = 1.0;  ///< ell = ceil(c_ell * log2(n / delta))
};

/// Seed -> restriction map: U = first n seed bits, Z = Ber(1/d) sampler with
/// error delta / (2n) on the rest, result U (*) Z.
class PseudorestrictionSampler {
 public:
  PseudorestrictionSampler(unsigned n, unsigned d, double delta, const PseudorestrictionConfig& config = {});
  static PseudorestrictionSampler all_star(unsigned n);

  unsigned length() const noexcept { return n_; }
  unsigned d() const noexcept { return d_; }
  unsigned ell() const noexcept { return ell_; }
  double delta() const noexcept { return delta_; }
  unsigned seed_length() const noexcept { return n_ + z_.seed_length(); }
  const nlohmann::ordered_json& descriptor() const noexcept { return descriptor_; }

  Restriction operator()(const BitVec& seed) const;

 private:
  PseudorestrictionSampler(unsigned n, unsigned d, unsigned ell, double delta, nlohmann::ordered_json descriptor);

  unsigned n_;
  unsigned d_;
  unsigned ell_;
  double delta_;
  BerSampler z_;
  nlohmann::ordered_json descriptor_;
  bool all_star_ = false;
};

unsigned pseudorestriction_ell(unsigned n, double delta, const PseudorestrictionConfig& config);

Restriction sample_pseudorestriction(unsigned n, unsigned d, double delta, const BitVec& seed,
                                     const PseudorestrictionConfig& config = {});

/// Which source fixed each output coordinate: round index, or `rounds` for the base generator.
std::vector<unsigned> aw_trace(const PseudorestrictionSampler& sampler, unsigned rounds, const BitVec& seed);

/// Round-composed generator. Round j reads its own seed block and fixes the
/// still-alive coordinates its restriction does not star; the base generator
/// fills what survives. Seed = round seeds then the base seed.
Generator aw_prg(const Generator& base, const PseudorestrictionSampler& sampler, unsigned rounds);

}  // namespace plab
