#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "plab/boolean_function.hpp"
#include "plab/models.hpp"
#include "plab/parallel.hpp"
#include "plab/prg.hpp"
#include "plab/random.hpp"

namespace plab {

inline constexpr unsigned kCorrExactMaxArity = 28;
inline constexpr unsigned kFoolingExactMaxSeed = 24;
inline constexpr unsigned kFoolingExactMaxArity = 24;
inline constexpr unsigned kNormExactMaxBits = 26;
/// Default cap on class size times 2^n for exhaustive class searches.
inline constexpr std::uint64_t kDefaultClassBudget = std::uint64_t{1} << 33;

enum class Mode { Exact, MonteCarlo };

struct CorrReport {
  double value = 0.0;
  Mode mode = Mode::Exact;
  std::uint64_t samples = 0;  ///< 0 in exact mode
  double radius = 0.0;        ///< 99% confidence radius; 0 in exact mode
  /// Exact mode: value = |numerator| / denominator.
  std::int64_t numerator = 0;
  std::uint64_t denominator = 1;
  std::optional<std::uint64_t> argmax;
  nlohmann::ordered_json argmax_descriptor;
};

/// sqrt(2 ln(200) / N): Hoeffding radius at 99% for means of +-1 variables.
double hoeffding_radius99(std::uint64_t samples);

/// sum_x (-1)^{f(x) + g(x)} over all 2^n inputs.
std::int64_t correlation_sum(const BooleanFunction& f, const BooleanFunction& g, const ExecPolicy& policy = {});

CorrReport corr_exact(const BooleanFunction& f, const BooleanFunction& g, const ExecPolicy& policy = {});
CorrReport corr_mc(const BooleanFunction& f, const BooleanFunction& g, std::uint64_t samples, Rng& rng);

/// A finite, deterministically ordered family of functions of one arity.
class AdversaryClass {
 public:
  using Member = std::function<BooleanFunction(std::uint64_t)>;
  using Describe = std::function<nlohmann::ordered_json(std::uint64_t)>;

  AdversaryClass(std::string name, unsigned arity, std::uint64_t size, Member member, Describe describe,
                 nlohmann::ordered_json config);

  /// Every function of <= width of the n variables, each listed once: for
  /// each support (by size, then colex) the tables that depend on all of it.
  static AdversaryClass juntas(unsigned n, unsigned width);
  /// x -> <a, x> + c for all a in {0,1}^n, c in {0,1}.
  static AdversaryClass affine(unsigned n);
  /// All polynomials of degree < max_degree_exclusive, set-multilinear over the
  /// partition, with a constant term. Throws BudgetExceeded above `budget` members.
  static AdversaryClass set_multilinear(unsigned n, const Partition& partition, unsigned max_degree_exclusive,
                                        std::uint64_t budget = std::uint64_t{1} << 24);
  /// Deterministic 2-party number-on-forehead protocols exchanging one bit,
  /// that bit being the output: every function of a single block.
  static AdversaryClass nof_one_bit(unsigned block_bits);
  /// z -> f(j_1(z), ..., j_n(z)) with each j_t a function of <= k of the r bits.
  static AdversaryClass junta_composition(const BooleanFunction& f, unsigned r, unsigned k,
                                          std::uint64_t budget = std::uint64_t{1} << 24);
  /// `samples` random polynomials with `terms` monomials of degree <= degree.
  static AdversaryClass sparse_sampled(unsigned n, unsigned degree, unsigned terms, std::uint64_t samples,
                                       std::uint64_t seed);
  static AdversaryClass list(std::string name, std::vector<BooleanFunction> members);

  const std::string& name() const noexcept { return name_; }
  unsigned arity() const noexcept { return arity_; }
  std::uint64_t size() const noexcept { return size_; }
  BooleanFunction member(std::uint64_t i) const { return member_(i); }
  nlohmann::ordered_json describe(std::uint64_t i) const { return describe_(i); }
  const nlohmann::ordered_json& config() const noexcept { return config_; }

 private:
  std::string name_;
  unsigned arity_;
  std::uint64_t size_;
  Member member_;
  Describe describe_;
  nlohmann::ordered_json config_;
};

/// Max exact correlation over the class with the first maximizer as witness.
/// Throws BudgetExceeded when size * 2^n exceeds `budget`.
CorrReport corr_class_max(const BooleanFunction& f, const AdversaryClass& c, const ExecPolicy& policy = {},
                          std::uint64_t budget = kDefaultClassBudget);

/// R_k(f) for f over k blocks of b bits (block j = bits [j*b, (j+1)*b)).
/// Exact when 2kb <= 26; otherwise Monte Carlo if mc_samples > 0, else ArityTooLarge.
CorrReport kparty_norm(const BooleanFunction& f, unsigned k, unsigned b, const ExecPolicy& policy = {},
                       std::uint64_t mc_samples = 0, std::uint64_t mc_seed = 0);

/// |E(-1)^{f(U)} - E(-1)^{f(G(s))}|; exact when seed and arity are <= 24.
CorrReport fooling_error(const Generator& g, const BooleanFunction& f, const ExecPolicy& policy = {},
                         std::uint64_t mc_samples = 100000, std::uint64_t mc_seed = 0);

/// A finite distribution on {0,1}^bits given by nonnegative integer weights.
struct Distribution {
  unsigned bits = 0;
  std::vector<std::uint64_t> counts;

  static Distribution uniform(unsigned bits);
  static Distribution point(unsigned bits, std::uint64_t value);
  std::uint64_t total() const noexcept;
};

/// Half the L1 distance, computed exactly as a ratio of integers.
double tv_distance(const Distribution& a, const Distribution& b);

/// Outcome of a closed-form bound comparison.
struct BoundCheck {
  double measured = 0.0;
  double bound = 0.0;
  double slack = 0.0;  ///< bound - measured
  bool pass = false;
  bool vacuous = false;  ///< bound >= 1
  CorrReport report;
  nlohmann::ordered_json config;
};

/// d eps + (d - 1)(1 / (2^k eps^2) + eps).
double extffm_corr_bound(unsigned d, unsigned k, double eps);

/// Algebraic normal form of a function with arity <= 20.
SparsePolyF2 anf(const BooleanFunction& f);

/// Measures ExtFFM (inputs X then seed W) against `cls`, after confirming every
/// member has degree < d and is set-multilinear over `partition`
/// (HypothesisViolation otherwise).
BoundCheck check_extffm_bound(unsigned d, unsigned k, double eps, const gf2::FieldSpec& field, unsigned block,
                             const Partition& partition, const AdversaryClass& cls, const ExecPolicy& policy = {},
                             std::uint64_t budget = kDefaultClassBudget);

/// For each of the d contiguous X-blocks, the largest intersection with a
/// part of `parts` (first part on ties).
std::vector<std::vector<unsigned>> set_multilinear_alive_sets(unsigned n, unsigned d, const Partition& parts);

/// Fooling bound for a 2BP through its decomposition: the 0/1 gap of B under
/// G versus L1(core) times the worst +-1 gap over nonempty XORs of the juntas.
struct LiftingReport {
  double gap = 0.0;          ///< |E B(U) - E B(G(s))|
  double l1_core = 0.0;
  double junta_error = 0.0;  ///< max_{S != 0} fooling error of XOR_{i in S} phi_i
  std::uint64_t junta_argmax = 0;
  double bound = 0.0;        ///< l1_core * junta_error
  bool pass = false;
};

LiftingReport bp2_lifting_check(const Generator& g, const BranchingProgram2& b);

}  // namespace plab
