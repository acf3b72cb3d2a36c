#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "plab/bitvec.hpp"

namespace plab {

/// Truth tables are only materialized up to this arity (16 Mi entries).
inline constexpr unsigned kMaterializeMaxArity = 24;

/// Packed truth table: entry x is bit (x % 64) of word x / 64.
class TruthTable {
 public:
  TruthTable() = default;
  explicit TruthTable(unsigned arity);

  unsigned arity() const noexcept { return arity_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << arity_; }
  bool operator[](std::uint64_t x) const noexcept { return ((words_[x >> 6] >> (x & 63)) & 1U) != 0; }
  void set(std::uint64_t x, bool v) noexcept {
    if (v)
      words_[x >> 6] |= std::uint64_t{1} << (x & 63);
    else
      words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
  }
  std::uint64_t ones() const noexcept;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  unsigned arity_ = 0;
  std::vector<std::uint64_t> words_;
};

/// An arity-n predicate over word-packed inputs (bit i = x_i), n <= 64.
/// Cheap to copy; the evaluator is shared.
class BooleanFunction {
 public:
  using Eval = std::function<bool(std::uint64_t)>;

  BooleanFunction() = default;
  BooleanFunction(unsigned arity, Eval eval);
  static BooleanFunction from_table(TruthTable table);

  static BooleanFunction constant(unsigned arity, bool value);
  static BooleanFunction dictator(unsigned arity, unsigned index);
  static BooleanFunction parity(unsigned arity);
  static BooleanFunction parity_of(unsigned arity, std::uint64_t mask);
  static BooleanFunction conjunction(unsigned arity);

  unsigned arity() const noexcept { return arity_; }
  bool operator()(std::uint64_t x) const {
    return table_ ? (*table_)[x] : eval_(x);
  }
  bool eval(const BitVec& x) const;

  bool has_table() const noexcept { return table_ != nullptr; }
  /// Truth-table-backed copy. Throws ArityTooLarge above kMaterializeMaxArity.
  BooleanFunction materialize() const;
  TruthTable table() const;

  BooleanFunction negated() const;

 private:
  unsigned arity_ = 0;
  Eval eval_;
  std::shared_ptr<const TruthTable> table_;
};

BooleanFunction xor_of(const BooleanFunction& f, const BooleanFunction& g);

}  // namespace plab
