#include "plab/gf2.hpp"

#include <array>
#include <string>

#include "plab/error.hpp"

namespace plab::gf2 {
namespace {

using u128 = unsigned __int128;

int degree(u128 p) {
  int d = -1;
  while (p != 0) {
    p >>= 1;
    ++d;
  }
  return d;
}

u128 poly_mod(u128 a, u128 m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

u128 poly_gcd(u128 a, u128 b) {
  while (b != 0) {
    const u128 r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

bool trial_division(unsigned width, u128 f) {
  const std::uint64_t limit = std::uint64_t{1} << (width / 2 + 1);
  for (std::uint64_t g = 2; g < limit; ++g)
    if (poly_mod(f, g) == 0) return false;
  return true;
}

// f is irreducible iff gcd(f, x^(2^i) - x) = 1 for all 1 <= i <= w/2.
bool ben_or(unsigned width, std::uint64_t low) {
  const u128 f = (u128{1} << width) | low;
  if (width > 1 && (low & 1U) == 0) return false;
  // Squaring modulo f via the field multiplier; valid for any modulus shape.
  const std::uint64_t top = std::uint64_t{1} << (width - 1);
  const std::uint64_t mask = low_mask(width);
  auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t acc = 0;
    while (b != 0) {
      if (b & 1U) acc ^= a;
      b >>= 1;
      const bool carry = (a & top) != 0;
      a = (a << 1) & mask;
      if (carry) a ^= low;
    }
    return acc;
  };
  const std::uint64_t x = width == 1 ? 0 : 2;
  std::uint64_t t = x;
  for (unsigned i = 1; i <= width / 2; ++i) {
    t = mulmod(t, t);
    if (poly_gcd(f, t ^ x) != 1) return false;
  }
  return true;
}

// Lexicographically first irreducible polynomial of each degree, low terms only.
constexpr std::array<std::uint64_t, 64> kDefaultReduction = {
    0x0,  0x3,  0x3,  0x3,  0x5,  0x3,  0x3,  0x1b, 0x3,  0x9,  0x5,  0x9,  0x1b, 0x21, 0x3, 0x2b,
    0x9,  0x9,  0x27, 0x9,  0x5,  0x3,  0x21, 0x1b, 0x9,  0x1b, 0x27, 0x3,  0x5,  0x3,  0x9, 0x8d,
    0x4b, 0x1b, 0x5,  0x35, 0x3f, 0x63, 0x11, 0x39, 0x9,  0x27, 0x59, 0x21, 0x1b, 0x3,  0x21, 0x2d,
    0x71, 0x1d, 0x4b, 0x9,  0x47, 0x7d, 0x47, 0x95, 0x11, 0x63, 0x7b, 0x3,  0x27, 0x69, 0x3, 0x1b,
};

}  // namespace

bool is_irreducible(unsigned width, std::uint64_t low_terms) {
  require(width >= 1 && width <= kMaxWidth, ErrorCode::ParameterOutOfRange,
          "field width must be in [1, 64], got " + std::to_string(width));
  low_terms &= low_mask(width);
  if (width == 1) return true;
  if (width <= kTrialDivisionMaxWidth) return trial_division(width, (u128{1} << width) | low_terms);
  return ben_or(width, low_terms);
}

std::uint64_t default_reduction(unsigned width) {
  require(width >= 1 && width <= kMaxWidth, ErrorCode::ParameterOutOfRange,
          "no default modulus for width " + std::to_string(width));
  return kDefaultReduction[width - 1];
}

FieldSpec FieldSpec::create(unsigned width, const BitVec& modulus) {
  require(width >= 1 && width <= kMaxWidth, ErrorCode::ParameterOutOfRange,
          "field width must be in [1, 64], got " + std::to_string(width));
  std::size_t deg = 0;
  bool any = false;
  for (std::size_t i = 0; i < modulus.size(); ++i)
    if (modulus.get(i)) {
      deg = i;
      any = true;
    }
  require(any && deg == width, ErrorCode::DegreeMismatch,
          "modulus degree " + (any ? std::to_string(deg) : std::string("-inf")) + " != width " +
              std::to_string(width));
  const std::uint64_t low = modulus.extract(0, width);
  require(is_irreducible(width, low), ErrorCode::ReducibleModulus,
          "x^" + std::to_string(width) + " + 0x" + BitVec(width, low).to_hex() + " factors over F_2");
  return FieldSpec(width, low);
}

FieldSpec FieldSpec::from_poly(unsigned width, std::uint64_t modulus) {
  require(width <= 63, ErrorCode::ParameterOutOfRange, "from_poly supports width <= 63");
  return create(width, BitVec(width + 1, modulus));
}

FieldSpec FieldSpec::standard(unsigned width) { return FieldSpec(width, default_reduction(width)); }

BitVec FieldSpec::modulus() const {
  BitVec m(width_ + 1, reduction_);
  m.set(width_, true);
  return m;
}

std::uint64_t FieldSpec::mul_reference(std::uint64_t a, std::uint64_t b) const noexcept {
  u128 product = 0;
  for (unsigned i = 0; i < width_; ++i)
    if (bit_of(b, i)) product ^= u128{a} << i;
  const u128 m = (u128{1} << width_) | reduction_;
  return static_cast<std::uint64_t>(poly_mod(product, m));
}

std::uint64_t FieldSpec::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t result = 1;
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement::FieldElement(const FieldSpec& spec, std::uint64_t bits) : spec_(spec), bits_(bits) {
  require((bits & ~spec.element_mask()) == 0, ErrorCode::LengthMismatch,
          "element wider than field width " + std::to_string(spec.width()));
}

namespace {
void same_field(const FieldElement& a, const FieldElement& b) {
  require(a.spec() == b.spec(), ErrorCode::SpecMismatch, "operands belong to different fields");
}
}  // namespace

FieldElement gf_add(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  return {a.spec(), a.bits() ^ b.bits()};
}

FieldElement gf_mul(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  return {a.spec(), a.spec().mul(a.bits(), b.bits())};
}

bool inner_product(const BitVec& x, const BitVec& y) {
  require(x.size() == y.size(), ErrorCode::LengthMismatch,
          "inner product of lengths " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
  bool acc = false;
  for (std::size_t i = 0; i < x.words().size(); ++i) acc ^= parity(x.words()[i] & y.words()[i]);
  return acc;
}

bool character(const FieldElement& c, const FieldElement& x) { return lsb(gf_mul(c, x)); }

bool character_inner(const FieldElement& c, const FieldElement& x) {
  same_field(c, x);
  return parity(c.bits() & x.bits());
}

}  // namespace plab::gf2
