#include "plab/restriction.hpp"

#include <string>

#include "plab/error.hpp"

namespace plab {

Restriction Restriction::parse(std::string_view text) {
  std::vector<Cell> cells;
  cells.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': cells.push_back(Cell::Zero); break;
      case '1': cells.push_back(Cell::One); break;
      case '*': cells.push_back(Cell::Star); break;
      default: fail(ErrorCode::ParseError, "restriction contains '" + std::string(1, c) + "'");
    }
  }
  return Restriction(std::move(cells));
}

Restriction Restriction::from_masks(unsigned n, std::uint64_t star, std::uint64_t values) {
  require(n <= kWordBits, ErrorCode::ArityTooLarge, "word-form restrictions hold at most 64 cells");
  Restriction r(n);
  for (unsigned i = 0; i < n; ++i)
    r.cells_[i] = bit_of(star, i) ? Cell::Star : (bit_of(values, i) ? Cell::One : Cell::Zero);
  return r;
}

std::vector<unsigned> Restriction::alive() const {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i] == Cell::Star) out.push_back(static_cast<unsigned>(i));
  return out;
}

std::size_t Restriction::alive_count() const noexcept {
  std::size_t n = 0;
  for (auto c : cells_) n += c == Cell::Star;
  return n;
}

std::uint64_t Restriction::star_mask() const {
  require(cells_.size() <= kWordBits, ErrorCode::ArityTooLarge, "restriction wider than 64 cells");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i] == Cell::Star) m |= std::uint64_t{1} << i;
  return m;
}

std::uint64_t Restriction::value_mask() const {
  require(cells_.size() <= kWordBits, ErrorCode::ArityTooLarge, "restriction wider than 64 cells");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i] == Cell::One) m |= std::uint64_t{1} << i;
  return m;
}

std::uint64_t Restriction::fill(std::uint64_t x) const {
  const std::uint64_t star = star_mask();
  return (x & star) | value_mask();
}

std::string Restriction::to_string() const {
  std::string s(cells_.size(), '*');
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i] != Cell::Star) s[i] = cells_[i] == Cell::One ? '1' : '0';
  return s;
}

Restriction sample_rp(std::size_t n, double p, Rng& rng) {
  require(p >= 0.0 && p <= 1.0, ErrorCode::InvalidProbability, "p = " + std::to_string(p) + " not in [0, 1]");
  Restriction r(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = uniform01(rng);
    if (u < p)
      r.set(i, Cell::Star);
    else
      r.set(i, (rng() & 1U) ? Cell::One : Cell::Zero);
  }
  return r;
}

Restriction compose(const Restriction& first, const Restriction& second) {
  require(first.size() == second.size(), ErrorCode::LengthMismatch,
          "composing restrictions of lengths " + std::to_string(first.size()) + " and " +
              std::to_string(second.size()));
  Restriction out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out.set(i, first[i] != Cell::Star ? first[i] : second[i]);
  return out;
}

BooleanFunction apply(const BooleanFunction& f, const Restriction& rho) {
  require(f.arity() == rho.size(), ErrorCode::ArityMismatch,
          "restriction of length " + std::to_string(rho.size()) + " applied to arity " + std::to_string(f.arity()));
  const std::uint64_t star = rho.star_mask();
  const std::uint64_t values = rho.value_mask();
  return {f.arity(), [f, star, values](std::uint64_t x) { return f((x & star) | values); }};
}

Restriction star_merge(const BitVec& x, const BitVec& y) {
  require(x.size() == y.size(), ErrorCode::LengthMismatch, "star_merge of different lengths");
  Restriction out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out.set(i, y.get(i) ? Cell::Star : (x.get(i) ? Cell::One : Cell::Zero));
  return out;
}

}  // namespace plab
