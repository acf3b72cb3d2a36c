#include "plab/models.hpp"

#include <algorithm>
#include <string>

#include "plab/error.hpp"

namespace plab {
namespace {

std::uint64_t mask_of(const std::vector<unsigned>& idx) {
  std::uint64_t m = 0;
  for (auto i : idx) m |= std::uint64_t{1} << i;
  return m;
}

void check_indices(const std::vector<unsigned>& idx, unsigned arity, const char* what) {
  for (auto i : idx)
    require(i < arity, ErrorCode::ArityMismatch,
            std::string(what) + " index " + std::to_string(i) + " outside arity " + std::to_string(arity));
}

// k distinct coordinates of [n] in random order (partial Fisher-Yates).
std::vector<unsigned> random_subset(unsigned n, unsigned k, Rng& rng) {
  std::vector<unsigned> all(n);
  for (unsigned i = 0; i < n; ++i) all[i] = i;
  for (unsigned i = 0; i < k; ++i) std::swap(all[i], all[i + uniform_below(rng, n - i)]);
  all.resize(k);
  return all;
}

}  // namespace

Junta::Junta(unsigned arity, std::vector<unsigned> support, TruthTable table)
    : arity_(arity), support_(std::move(support)), table_(std::move(table)) {
  require(arity <= kWordBits, ErrorCode::ArityTooLarge, "junta arity above 64");
  check_indices(support_, arity, "junta support");
  require(table_.arity() == support_.size(), ErrorCode::ShapeMismatch,
          "junta table has arity " + std::to_string(table_.arity()) + " for support of size " +
              std::to_string(support_.size()));
  support_mask_ = mask_of(support_);
}

Junta Junta::dictator(unsigned arity, unsigned index) {
  TruthTable t(1);
  t.set(1, true);
  return {arity, {index}, t};
}

Junta Junta::random(unsigned arity, std::vector<unsigned> support, Rng& rng) {
  TruthTable t(static_cast<unsigned>(support.size()));
  for (std::uint64_t x = 0; x < t.size(); ++x) t.set(x, rng() & 1U);
  return {arity, std::move(support), std::move(t)};
}

bool Junta::eval(const BitVec& x) const {
  require(x.size() == arity_, ErrorCode::ArityMismatch, "junta input length mismatch");
  return (*this)(x.word());
}

BooleanFunction Junta::function() const {
  auto self = *this;
  return {arity_, [self](std::uint64_t x) { return self(x); }};
}

Junta compose_juntas(const Junta& outer, const std::vector<Junta>& inner) {
  require(outer.arity() == inner.size(), ErrorCode::ShapeMismatch,
          "outer junta has arity " + std::to_string(outer.arity()) + " but " + std::to_string(inner.size()) +
              " inner juntas were given");
  std::uint64_t mask = 0;
  unsigned arity = inner.empty() ? 0 : inner.front().arity();
  for (const auto& g : inner) {
    require(g.arity() == arity, ErrorCode::ArityMismatch, "inner juntas disagree on arity");
  }
  for (auto i : outer.support()) mask |= inner[i].support_mask();
  std::vector<unsigned> support;
  for (unsigned i = 0; i < arity; ++i)
    if (bit_of(mask, i)) support.push_back(i);
  TruthTable t(static_cast<unsigned>(support.size()));
  for (std::uint64_t y = 0; y < t.size(); ++y) {
    std::uint64_t x = 0;
    for (unsigned j = 0; j < support.size(); ++j)
      if (bit_of(y, j)) x |= std::uint64_t{1} << support[j];
    std::uint64_t z = 0;
    for (unsigned j = 0; j < outer.support().size(); ++j)
      if (inner[outer.support()[j]](x)) z |= std::uint64_t{1} << outer.support()[j];
    t.set(y, outer(z));
  }
  return {arity, std::move(support), std::move(t)};
}

XorOfJuntas::XorOfJuntas(unsigned arity, std::vector<Junta> terms) : arity_(arity), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    require(t.arity() == arity_, ErrorCode::ArityMismatch, "XOR-of-juntas term with different arity");
}

std::size_t XorOfJuntas::max_width() const noexcept {
  std::size_t w = 0;
  for (const auto& t : terms_) w = std::max(w, t.support().size());
  return w;
}

bool XorOfJuntas::eval(const BitVec& x) const {
  require(x.size() == arity_, ErrorCode::ArityMismatch, "XOR-of-juntas input length mismatch");
  return (*this)(x.word());
}

BooleanFunction XorOfJuntas::function() const {
  auto self = *this;
  return {arity_, [self](std::uint64_t x) { return self(x); }};
}

XorOfJuntas random_xor_of_juntas(unsigned arity, unsigned width, unsigned terms, Rng& rng) {
  require(width <= arity, ErrorCode::ParameterOutOfRange, "junta width exceeds arity");
  std::vector<Junta> out;
  out.reserve(terms);
  for (unsigned i = 0; i < terms; ++i) {
    auto support = random_subset(arity, width, rng);
    std::sort(support.begin(), support.end());
    out.push_back(Junta::random(arity, std::move(support), rng));
  }
  return XorOfJuntas(arity, std::move(out));
}

SparsePolyF2::SparsePolyF2(unsigned arity, std::vector<std::uint64_t> monomials, bool constant)
    : arity_(arity), constant_(constant) {
  require(arity <= kWordBits, ErrorCode::ArityTooLarge, "polynomial arity above 64");
  std::sort(monomials.begin(), monomials.end());
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    const auto m = monomials[i];
    require((m & ~low_mask(arity)) == 0, ErrorCode::ArityMismatch, "monomial variable outside arity");
    if ((j - i) % 2 == 1) {
      // The empty monomial is the constant 1.
      if (m == 0)
        constant_ = !constant_;
      else
        monomials_.push_back(m);
    }
    i = j;
  }
}

unsigned SparsePolyF2::degree() const noexcept {
  unsigned d = 0;
  for (auto m : monomials_) d = std::max(d, static_cast<unsigned>(std::popcount(m)));
  return d;
}

bool SparsePolyF2::eval(const BitVec& x) const {
  require(x.size() == arity_, ErrorCode::ArityMismatch, "polynomial input length mismatch");
  return (*this)(x.word());
}

BooleanFunction SparsePolyF2::function() const {
  auto self = *this;
  return {arity_, [self](std::uint64_t x) { return self(x); }};
}

Partition::Partition(std::vector<std::vector<unsigned>> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    require(!b.empty(), ErrorCode::ShapeMismatch, "partition block is empty");
    std::uint64_t m = 0;
    for (auto i : b) {
      require(i < kWordBits, ErrorCode::ArityTooLarge, "partition variable above 63");
      require(!bit_of(m, i) && !bit_of(covered_, i), ErrorCode::ShapeMismatch,
              "variable " + std::to_string(i) + " appears twice in the partition");
      m |= std::uint64_t{1} << i;
    }
    masks_.push_back(m);
    covered_ |= m;
  }
}

Partition Partition::contiguous(unsigned n, unsigned d) {
  require(d >= 1 && n % d == 0, ErrorCode::ShapeMismatch,
          std::to_string(d) + " blocks do not divide " + std::to_string(n) + " variables");
  std::vector<std::vector<unsigned>> blocks(d);
  for (unsigned i = 0; i < n; ++i) blocks[i / (n / d)].push_back(i);
  return Partition(std::move(blocks));
}

bool is_set_multilinear(const SparsePolyF2& p, const Partition& q) {
  bool ok = true;
  for (auto m : p.monomials()) {
    require((m & ~q.covered()) == 0, ErrorCode::UncoveredVariable,
            "monomial variable x" + std::to_string(std::countr_zero(m & ~q.covered())) + " lies in no block");
    for (auto b : q.masks()) ok = ok && std::popcount(m & b) <= 1;
  }
  return ok;
}

SparsePolyF2 restrict_poly(const SparsePolyF2& p, const Restriction& rho) {
  require(rho.size() == p.arity(), ErrorCode::ArityMismatch, "restriction length differs from polynomial arity");
  const std::uint64_t star = rho.star_mask();
  const std::uint64_t ones = rho.value_mask();
  std::vector<std::uint64_t> out;
  bool constant = p.constant();
  for (auto m : p.monomials()) {
    // A variable fixed to 0 kills the monomial; fixed 1s drop out.
    if ((m & ~star & ~ones) != 0) continue;
    const std::uint64_t rest = m & star;
    if (rest == 0)
      constant = !constant;
    else
      out.push_back(rest);
  }
  return SparsePolyF2(p.arity(), std::move(out), constant);
}

SparsePolyF2 junta_to_sparse(const Junta& j) {
  const auto d = static_cast<unsigned>(j.support().size());
  require(d <= 20, ErrorCode::SupportTooLarge, "junta support of " + std::to_string(d) + " exceeds 20");
  std::vector<std::uint8_t> a(std::size_t{1} << d);
  for (std::uint64_t y = 0; y < a.size(); ++y) a[y] = j.table()[y];
  for (unsigned i = 0; i < d; ++i)
    for (std::uint64_t y = 0; y < a.size(); ++y)
      if (bit_of(y, i)) a[y] ^= a[y ^ (std::uint64_t{1} << i)];
  std::vector<std::uint64_t> monomials;
  for (std::uint64_t y = 1; y < a.size(); ++y) {
    if (!a[y]) continue;
    std::uint64_t m = 0;
    for (unsigned i = 0; i < d; ++i)
      if (bit_of(y, i)) m |= std::uint64_t{1} << j.support()[i];
    monomials.push_back(m);
  }
  return SparsePolyF2(j.arity(), std::move(monomials), a[0] != 0);
}

unsigned BranchingProgram2::read_width() const noexcept {
  std::size_t w = 0;
  for (const auto& layer : layers)
    for (const auto& node : layer) w = std::max(w, node.reads.size());
  return static_cast<unsigned>(w);
}

void BranchingProgram2::validate() const {
  require(arity <= kWordBits, ErrorCode::ArityTooLarge, "branching program arity above 64");
  require(start <= 1 && accept <= 1, ErrorCode::ShapeMismatch, "start/accept node must be 0 or 1");
  for (std::size_t j = 0; j < layers.size(); ++j) {
    for (const auto& node : layers[j]) {
      check_indices(node.reads, arity, "branching program read");
      require(node.reads.size() <= kMaterializeMaxArity, ErrorCode::ArityTooLarge, "node reads too many bits");
      require(node.table.size() == (std::size_t{1} << node.reads.size()), ErrorCode::ShapeMismatch,
              "layer " + std::to_string(j) + " transition table has wrong length");
      for (auto t : node.table) require(t <= 1, ErrorCode::ShapeMismatch, "transition names a node other than 0/1");
    }
  }
}

BooleanFunction BranchingProgram2::function() const {
  validate();
  auto self = *this;
  return {arity, [self](std::uint64_t x) { return self(x); }};
}

bool eval_2bp(const BranchingProgram2& b, const BitVec& x) {
  require(x.size() == b.arity, ErrorCode::ArityMismatch,
          "input has " + std::to_string(x.size()) + " bits, program reads " + std::to_string(b.arity));
  b.validate();
  return b(x.word());
}

BranchingProgram2 random_2bp(unsigned d, unsigned ell, unsigned n, Rng& rng) {
  require(n >= 1 && n <= kWordBits, ErrorCode::ParameterOutOfRange, "2BP arity must be in [1, 64]");
  BranchingProgram2 b;
  b.arity = n;
  b.layers.resize(ell);
  for (auto& layer : b.layers) {
    for (auto& node : layer) {
      if (d <= n) {
        node.reads = random_subset(n, d, rng);
      } else {
        node.reads.resize(d);
        for (auto& r : node.reads) r = static_cast<unsigned>(uniform_below(rng, n));
      }
      node.table.resize(std::size_t{1} << d);
      for (auto& t : node.table) t = rng() & 1U;
    }
  }
  return b;
}

std::uint64_t Decomposition2BP::lift(std::uint64_t x) const noexcept {
  std::uint64_t y = 0;
  for (std::size_t i = 0; i < juntas.size(); ++i)
    if (juntas[i](x)) y |= std::uint64_t{1} << i;
  return y;
}

Decomposition2BP decompose_2bp(const BranchingProgram2& b) {
  b.validate();
  const auto ell = static_cast<unsigned>(b.layers.size());
  require(2 * ell <= kWordBits, ErrorCode::ArityTooLarge, "decomposition core would exceed 64 inputs");
  Decomposition2BP out;
  out.core.arity = 2 * ell;
  out.core.start = b.start;
  out.core.accept = b.accept;
  out.core.layers.resize(ell);
  for (unsigned j = 0; j < ell; ++j) {
    for (unsigned v = 0; v < 2; ++v) {
      const auto& node = b.layers[j][v];
      out.core.layers[j][v] = {{2 * j + v}, {0, 1}};
      // Canonical support: distinct reads in ascending order.
      std::vector<unsigned> support = node.reads;
      std::sort(support.begin(), support.end());
      support.erase(std::unique(support.begin(), support.end()), support.end());
      TruthTable t(static_cast<unsigned>(support.size()));
      for (std::uint64_t y = 0; y < t.size(); ++y) {
        std::uint64_t x = 0;
        for (unsigned i = 0; i < support.size(); ++i)
          if (bit_of(y, i)) x |= std::uint64_t{1} << support[i];
        t.set(y, node.table[gather_bits(x, node.reads)] != 0);
      }
      out.juntas.emplace_back(b.arity, std::move(support), std::move(t));
    }
  }
  return out;
}

double FourierSpectrum::coefficient(std::uint64_t s) const {
  return static_cast<double>(scaled.at(s)) / static_cast<double>(std::uint64_t{1} << arity);
}

std::map<std::uint64_t, double> FourierSpectrum::nonzero() const {
  std::map<std::uint64_t, double> out;
  for (std::uint64_t s = 0; s < scaled.size(); ++s)
    if (scaled[s] != 0) out.emplace(s, coefficient(s));
  return out;
}

std::int64_t FourierSpectrum::l1_scaled() const noexcept {
  std::int64_t sum = 0;
  for (auto c : scaled) sum += c < 0 ? -c : c;
  return sum;
}

double FourierSpectrum::l1() const {
  return static_cast<double>(l1_scaled()) / static_cast<double>(std::uint64_t{1} << arity);
}

std::int64_t FourierSpectrum::squares_scaled() const noexcept {
  std::int64_t sum = 0;
  for (auto c : scaled) sum += c * c;
  return sum;
}

std::int64_t FourierSpectrum::reconstruct_scaled(std::uint64_t x) const noexcept {
  std::int64_t acc = 0;
  for (std::uint64_t s = 0; s < scaled.size(); ++s) acc += parity(s & x) ? -scaled[s] : scaled[s];
  return acc;
}

FourierSpectrum fourier_expand(const BooleanFunction& f) {
  require(f.arity() <= kFourierMaxArity, ErrorCode::ArityTooLarge,
          "Fourier expansion limited to " + std::to_string(kFourierMaxArity) + " inputs");
  FourierSpectrum out;
  out.arity = f.arity();
  const std::uint64_t size = std::uint64_t{1} << f.arity();
  out.scaled.resize(size);
  for (std::uint64_t x = 0; x < size; ++x) out.scaled[x] = f(x) ? 1 : 0;
  for (std::uint64_t h = 1; h < size; h <<= 1)
    for (std::uint64_t i = 0; i < size; i += 2 * h)
      for (std::uint64_t j = i; j < i + h; ++j) {
        const auto a = out.scaled[j];
        const auto b = out.scaled[j + h];
        out.scaled[j] = a + b;
        out.scaled[j + h] = a - b;
      }
  return out;
}

double l1_norm(const BooleanFunction& f) { return fourier_expand(f).l1(); }

}  // namespace plab
