#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "plab/bitvec.hpp"
#include "plab/boolean_function.hpp"
#include "plab/random.hpp"
#include "plab/restriction.hpp"

namespace plab {

/// A function of the coordinates in `support` only. Table index bit j is
/// x_{support[j]}.
class Junta {
 public:
  Junta() = default;
  Junta(unsigned arity, std::vector<unsigned> support, TruthTable table);

  static Junta dictator(unsigned arity, unsigned index);
  /// Junta with the given support and a table drawn uniformly at random.
  static Junta random(unsigned arity, std::vector<unsigned> support, Rng& rng);

  unsigned arity() const noexcept { return arity_; }
  const std::vector<unsigned>& support() const noexcept { return support_; }
  const TruthTable& table() const noexcept { return table_; }
  std::uint64_t support_mask() const noexcept { return support_mask_; }

  bool operator()(std::uint64_t x) const noexcept { return table_[gather_bits(x, support_)]; }
  bool eval(const BitVec& x) const;
  BooleanFunction function() const;

 private:
  unsigned arity_ = 0;
  std::vector<unsigned> support_;
  std::uint64_t support_mask_ = 0;
  TruthTable table_;
};

/// outer(inner_0(x), inner_1(x), ...) as one junta over the union of supports.
Junta compose_juntas(const Junta& outer, const std::vector<Junta>& inner);

class XorOfJuntas {
 public:
  explicit XorOfJuntas(unsigned arity, std::vector<Junta> terms = {});

  unsigned arity() const noexcept { return arity_; }
  const std::vector<Junta>& terms() const noexcept { return terms_; }
  std::size_t max_width() const noexcept;

  bool operator()(std::uint64_t x) const noexcept {
    bool acc = false;
    for (const auto& t : terms_) acc ^= t(x);
    return acc;
  }
  bool eval(const BitVec& x) const;
  BooleanFunction function() const;

 private:
  unsigned arity_;
  std::vector<Junta> terms_;
};

/// t random terms, each a uniformly random table on `width` distinct random coordinates.
XorOfJuntas random_xor_of_juntas(unsigned arity, unsigned width, unsigned terms, Rng& rng);

/// Polynomial over F_2 in monomial form; a monomial is a mask of its variables.
class SparsePolyF2 {
 public:
  /// Duplicate monomials cancel in pairs.
  SparsePolyF2(unsigned arity, std::vector<std::uint64_t> monomials, bool constant = false);

  unsigned arity() const noexcept { return arity_; }
  const std::vector<std::uint64_t>& monomials() const noexcept { return monomials_; }
  bool constant() const noexcept { return constant_; }
  unsigned degree() const noexcept;

  bool operator()(std::uint64_t x) const noexcept {
    bool acc = constant_;
    for (auto m : monomials_) acc ^= (x & m) == m;
    return acc;
  }
  bool eval(const BitVec& x) const;
  BooleanFunction function() const;

  friend bool operator==(const SparsePolyF2&, const SparsePolyF2&) = default;

 private:
  unsigned arity_;
  std::vector<std::uint64_t> monomials_;
  bool constant_;
};

/// Disjoint nonempty blocks of variables.
class Partition {
 public:
  explicit Partition(std::vector<std::vector<unsigned>> blocks);
  /// d contiguous blocks of n/d variables each.
  static Partition contiguous(unsigned n, unsigned d);

  const std::vector<std::vector<unsigned>>& blocks() const noexcept { return blocks_; }
  const std::vector<std::uint64_t>& masks() const noexcept { return masks_; }
  std::uint64_t covered() const noexcept { return covered_; }

 private:
  std::vector<std::vector<unsigned>> blocks_;
  std::vector<std::uint64_t> masks_;
  std::uint64_t covered_ = 0;
};

/// Every monomial meets every block in at most one variable. Throws
/// UncoveredVariable if a monomial uses a variable outside all blocks.
bool is_set_multilinear(const SparsePolyF2& p, const Partition& q);

/// Substitutes the fixed cells of rho; the result keeps the same arity.
SparsePolyF2 restrict_poly(const SparsePolyF2& p, const Restriction& rho);

/// Reed-Muller (Moebius) form of a junta over its support variables.
SparsePolyF2 junta_to_sparse(const Junta& j);

/// Width-2 layered program. Layer j, node v reads `reads` and moves to node
/// table[packed reads] of layer j+1. The output is 1 iff the final node is `accept`.
struct BranchingProgram2 {
  struct Node {
    std::vector<unsigned> reads;
    std::vector<std::uint8_t> table;
  };
  using Layer = std::array<Node, 2>;

  unsigned arity = 0;
  std::vector<Layer> layers;
  std::uint8_t start = 0;
  std::uint8_t accept = 1;

  /// Largest read-set size.
  unsigned read_width() const noexcept;
  void validate() const;
  bool operator()(std::uint64_t x) const noexcept {
    std::uint8_t v = start;
    for (const auto& layer : layers) {
      const auto& node = layer[v];
      v = node.table[gather_bits(x, node.reads)];
    }
    return v == accept;
  }
  BooleanFunction function() const;
};

bool eval_2bp(const BranchingProgram2& b, const BitVec& x);

/// A random (d, ell, n)-2BP: every node reads d distinct random coordinates
/// (with repetition when d > n) through a uniformly random transition table.
BranchingProgram2 random_2bp(unsigned d, unsigned ell, unsigned n, Rng& rng);

struct Decomposition2BP {
  BranchingProgram2 core;     ///< arity 2*ell; node (j, b) reads bit 2j+b
  std::vector<Junta> juntas;  ///< phi_{2j+b} = transition of node (j, b)

  /// The 2*ell-bit string (phi_0(x), ..., phi_{2ell-1}(x)).
  std::uint64_t lift(std::uint64_t x) const noexcept;
};

Decomposition2BP decompose_2bp(const BranchingProgram2& b);

inline constexpr unsigned kFourierMaxArity = 20;

/// Expansion of a 0/1-valued f as sum_S c_S (-1)^{sum_{i in S} x_i}. Stored
/// exactly as scaled[S] = c_S * 2^n.
struct FourierSpectrum {
  unsigned arity = 0;
  std::vector<std::int64_t> scaled;

  double coefficient(std::uint64_t s) const;
  /// Nonzero coefficients keyed by subset mask.
  std::map<std::uint64_t, double> nonzero() const;
  /// sum_S |c_S| * 2^n.
  std::int64_t l1_scaled() const noexcept;
  double l1() const;
  /// sum_S c_S^2 * 4^n.
  std::int64_t squares_scaled() const noexcept;
  /// Inverse transform at x, times 2^n.
  std::int64_t reconstruct_scaled(std::uint64_t x) const noexcept;
};

FourierSpectrum fourier_expand(const BooleanFunction& f);
double l1_norm(const BooleanFunction& f);

}  // namespace plab
