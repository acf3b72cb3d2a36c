#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "plab/bitvec.hpp"
#include "plab/boolean_function.hpp"
#include "plab/random.hpp"

namespace plab {

enum class Cell : std::uint8_t { Zero, One, Star };

/// A partial assignment rho in {0,1,*}^n.
class Restriction {
 public:
  Restriction() = default;
  explicit Restriction(std::size_t n, Cell fill = Cell::Star) : cells_(n, fill) {}
  explicit Restriction(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  /// Parses a string over {0,1,*}.
  static Restriction parse(std::string_view text);
  /// Word form for n <= 64: star bits mark alive cells, value bits the fixed ones.
  static Restriction from_masks(unsigned n, std::uint64_t star, std::uint64_t values);

  std::size_t size() const noexcept { return cells_.size(); }
  Cell operator[](std::size_t i) const noexcept { return cells_[i]; }
  void set(std::size_t i, Cell c) noexcept { cells_[i] = c; }

  std::vector<unsigned> alive() const;
  std::size_t alive_count() const noexcept;

  std::uint64_t star_mask() const;
  std::uint64_t value_mask() const;

  /// rho o x: fixed cells from rho, alive cells from x.
  std::uint64_t fill(std::uint64_t x) const;

  std::string to_string() const;

  friend bool operator==(const Restriction&, const Restriction&) = default;

 private:
  std::vector<Cell> cells_;
};

/// R_p: each cell independently Star w.p. p, else 0/1 w.p. (1-p)/2 each.
Restriction sample_rp(std::size_t n, double p, Rng& rng);

/// Cells fixed by `first` win; its Star cells take `second`'s cell.
Restriction compose(const Restriction& first, const Restriction& second);

/// f|rho(x) = f(rho o x), on the same index space.
BooleanFunction apply(const BooleanFunction& f, const Restriction& rho);

/// (x (*) y)_i = x_i when y_i = 0 and Star when y_i = 1.
Restriction star_merge(const BitVec& x, const BitVec& y);

}  // namespace plab
