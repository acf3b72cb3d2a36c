#include "plab/boolean_function.hpp"

#include <string>

#include "plab/error.hpp"

namespace plab {

TruthTable::TruthTable(unsigned arity) : arity_(arity) {
  require(arity <= kMaterializeMaxArity, ErrorCode::ArityTooLarge,
          "truth table of arity " + std::to_string(arity) + " exceeds " + std::to_string(kMaterializeMaxArity));
  words_.assign(((std::uint64_t{1} << arity) + 63) / 64, 0);
}

std::uint64_t TruthTable::ones() const noexcept {
  std::uint64_t n = 0;
  for (auto w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

BooleanFunction::BooleanFunction(unsigned arity, Eval eval) : arity_(arity), eval_(std::move(eval)) {
  require(arity <= kWordBits, ErrorCode::ArityTooLarge,
          "Boolean functions are limited to " + std::to_string(kWordBits) + " inputs");
}

BooleanFunction BooleanFunction::from_table(TruthTable table) {
  BooleanFunction f;
  f.arity_ = table.arity();
  auto shared = std::make_shared<const TruthTable>(std::move(table));
  f.table_ = shared;
  f.eval_ = [shared](std::uint64_t x) { return (*shared)[x]; };
  return f;
}

BooleanFunction BooleanFunction::constant(unsigned arity, bool value) {
  return {arity, [value](std::uint64_t) { return value; }};
}

BooleanFunction BooleanFunction::dictator(unsigned arity, unsigned index) {
  require(index < arity, ErrorCode::ArityMismatch, "dictator index out of range");
  return {arity, [index](std::uint64_t x) { return bit_of(x, index); }};
}

BooleanFunction BooleanFunction::parity(unsigned arity) { return parity_of(arity, low_mask(arity)); }

BooleanFunction BooleanFunction::parity_of(unsigned arity, std::uint64_t mask) {
  require((mask & ~low_mask(arity)) == 0, ErrorCode::ArityMismatch, "parity mask exceeds arity");
  return {arity, [mask](std::uint64_t x) { return plab::parity(x & mask); }};
}

BooleanFunction BooleanFunction::conjunction(unsigned arity) {
  const std::uint64_t mask = low_mask(arity);
  return {arity, [mask](std::uint64_t x) { return (x & mask) == mask; }};
}

bool BooleanFunction::eval(const BitVec& x) const {
  require(x.size() == arity_, ErrorCode::ArityMismatch,
          "input has " + std::to_string(x.size()) + " bits, function arity is " + std::to_string(arity_));
  return (*this)(x.word());
}

TruthTable BooleanFunction::table() const {
  if (table_) return *table_;
  TruthTable t(arity_);
  for (std::uint64_t x = 0; x < t.size(); ++x) t.set(x, eval_(x));
  return t;
}

BooleanFunction BooleanFunction::materialize() const {
  if (table_) return *this;
  return from_table(table());
}

BooleanFunction BooleanFunction::negated() const {
  auto self = *this;
  return {arity_, [self](std::uint64_t x) { return !self(x); }};
}

BooleanFunction xor_of(const BooleanFunction& f, const BooleanFunction& g) {
  require(f.arity() == g.arity(), ErrorCode::ArityMismatch, "xor of functions with different arities");
  return {f.arity(), [f, g](std::uint64_t x) { return f(x) != g(x); }};
}

}  // namespace plab
