#pragma once

#include <array>
#include <cstdint>

#include "plab/bitvec.hpp"

namespace plab::gf2 {

inline constexpr unsigned kMaxWidth = 64;

/// Widths up to this bound are validated by trial division against every
/// polynomial of degree <= width/2; wider moduli use Ben-Or's test.
inline constexpr unsigned kTrialDivisionMaxWidth = 24;

/// F_{2^w} = F_2[x]/E(x). Only the coefficients of E below x^w are stored;
/// the leading coefficient is implicit.
class FieldSpec {
 public:
  /// Validates degree and irreducibility. `modulus` has width+1 bits with
  /// bit i the coefficient of x^i.
  static FieldSpec create(unsigned width, const BitVec& modulus);
  /// Convenience for width <= 63: `modulus` includes the x^width term.
  static FieldSpec from_poly(unsigned width, std::uint64_t modulus);
  /// The pinned default: the lexicographically first irreducible of degree w.
  static FieldSpec standard(unsigned width);

  unsigned width() const noexcept { return width_; }
  std::uint64_t reduction() const noexcept { return reduction_; }
  std::uint64_t element_mask() const noexcept { return low_mask(width_); }
  std::uint64_t size() const noexcept { return width_ >= 64 ? 0 : std::uint64_t{1} << width_; }
  BitVec modulus() const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept { return a ^ b; }

  /// Shift-and-add with on-the-fly reduction.
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t top = std::uint64_t{1} << (width_ - 1);
    const std::uint64_t mask = element_mask();
    std::uint64_t acc = 0;
    while (b != 0) {
      if (b & 1U) acc ^= a;
      b >>= 1;
      const bool carry = (a & top) != 0;
      a = (a << 1) & mask;
      if (carry) a ^= reduction_;
    }
    return acc;
  }

  /// Full 2w-bit carryless product followed by long division.
  std::uint64_t mul_reference(std::uint64_t a, std::uint64_t b) const noexcept;

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(unsigned width, std::uint64_t reduction) : width_(width), reduction_(reduction) {}

  unsigned width_ = 1;
  std::uint64_t reduction_ = 0;
};

/// Irreducibility of x^width + (low terms).
bool is_irreducible(unsigned width, std::uint64_t low_terms);

/// Low coefficients of the default modulus for each width 1..64.
std::uint64_t default_reduction(unsigned width);

class FieldElement {
 public:
  FieldElement(const FieldSpec& spec, std::uint64_t bits);
  static FieldElement zero(const FieldSpec& spec) { return {spec, 0}; }
  static FieldElement one(const FieldSpec& spec) { return {spec, 1}; }

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint64_t bits() const noexcept { return bits_; }
  BitVec to_bitvec() const { return BitVec(spec_.width(), bits_); }
  std::string to_hex() const { return to_bitvec().to_hex(); }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldSpec spec_;
  std::uint64_t bits_;
};

FieldElement gf_add(const FieldElement& a, const FieldElement& b);
FieldElement gf_mul(const FieldElement& a, const FieldElement& b);
inline bool lsb(const FieldElement& a) noexcept { return (a.bits() & 1U) != 0; }

/// Parity of the coordinatewise AND.
bool inner_product(const BitVec& x, const BitVec& y);

/// chi_c(x) = lsb(c * x). This is the form every experiment uses.
bool character(const FieldElement& c, const FieldElement& x);
/// chi_c(x) = <x, c>. Enumerates the same 2^w characters, indexed differently.
bool character_inner(const FieldElement& c, const FieldElement& x);

}  // namespace plab::gf2
