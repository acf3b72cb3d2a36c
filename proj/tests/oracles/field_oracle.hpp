#pragma once

#include <cstdint>
#include <vector>

// Schoolbook GF(2)[x] arithmetic on explicit coefficient vectors, written
// without any of the library's word tricks.
namespace oracle {

using Poly = std::vector<int>;  // coefficient of x^i at index i

inline Poly from_bits(std::uint64_t v, unsigned len) {
  Poly p(len);
  for (unsigned i = 0; i < len; ++i) p[i] = static_cast<int>((v >> i) & 1U);
  return p;
}

inline std::uint64_t to_bits(const Poly& p) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < p.size() && i < 64; ++i)
    if (p[i] % 2) v |= std::uint64_t{1} << i;
  return v;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % 2;
  return c;
}

inline int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i]) return i;
  return -1;
}

inline Poly remainder(Poly a, const Poly& m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a))
    for (int i = 0; i <= dm; ++i) a[da - dm + i] = (a[da - dm + i] + m[i]) % 2;
  return a;
}

/// a * b mod modulus in F_2[x]/(modulus), modulus given with its leading term.
inline std::uint64_t field_mul(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, unsigned width) {
  const auto m = from_bits(modulus, width + 1);
  return to_bits(remainder(multiply(from_bits(a, width), from_bits(b, width)), m));
}

}  // namespace oracle
