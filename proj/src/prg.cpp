#include "plab/prg.hpp"

#include <cmath>
#include <string>

#include "plab/error.hpp"
#include "plab/hardfn.hpp"

namespace plab {
namespace {

unsigned ceil_log2(std::uint64_t v) { return v <= 1 ? 0 : static_cast<unsigned>(std::bit_width(v - 1)); }

nlohmann::ordered_json design_json(const Design& d) {
  nlohmann::ordered_json sets = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < d.sets.size(); ++i) sets.push_back(d.members(i));
  return {{"universe", d.universe},
          {"set_size", d.set_size},
          {"max_intersection", d.max_intersection},
          {"sets", sets}};
}

}  // namespace

std::vector<unsigned> Design::members(std::size_t i) const {
  std::vector<unsigned> out;
  for (unsigned j = 0; j < universe; ++j)
    if (bit_of(sets.at(i), j)) out.push_back(j);
  return out;
}

void Design::check() const {
  require(universe <= kWordBits, ErrorCode::ShapeMismatch, "design universe above 64");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    require((sets[i] & ~low_mask(universe)) == 0, ErrorCode::ShapeMismatch, "design set outside universe");
    require(std::popcount(sets[i]) == static_cast<int>(set_size), ErrorCode::ShapeMismatch,
            "design set " + std::to_string(i) + " has the wrong size");
    for (std::size_t j = 0; j < i; ++j)
      require(std::popcount(sets[i] & sets[j]) <= static_cast<int>(max_intersection), ErrorCode::ShapeMismatch,
              "design sets " + std::to_string(j) + " and " + std::to_string(i) + " intersect too much");
  }
}

Design build_design(unsigned count, unsigned universe, unsigned set_size, unsigned max_intersection) {
  require(universe <= kWordBits, ErrorCode::ParameterOutOfRange, "design universe above 64");
  require(set_size >= 1 && set_size <= universe, ErrorCode::Infeasible,
          "set size " + std::to_string(set_size) + " does not fit universe " + std::to_string(universe));
  Design d{universe, set_size, max_intersection, {}};
  if (static_cast<std::uint64_t>(count) * set_size <= universe) {
    for (unsigned i = 0; i < count; ++i) d.sets.push_back(low_mask(set_size) << (i * set_size));
    return d;
  }
  std::vector<unsigned> c(set_size);
  for (unsigned i = 0; i < set_size; ++i) c[i] = i;
  std::uint64_t examined = 0;
  for (;;) {
    std::uint64_t mask = 0;
    for (auto i : c) mask |= std::uint64_t{1} << i;
    bool ok = true;
    for (auto s : d.sets)
      if (std::popcount(s & mask) > static_cast<int>(max_intersection)) {
        ok = false;
        break;
      }
    if (ok) {
      d.sets.push_back(mask);
      if (d.sets.size() == count) return d;
    }
    if (++examined >= kDesignCandidateBudget) break;
    int i = static_cast<int>(set_size) - 1;
    while (i >= 0 && c[i] == universe - set_size + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++c[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < set_size; ++j) c[j] = c[j - 1] + 1;
  }
  fail(ErrorCode::Infeasible, "greedy design found " + std::to_string(d.sets.size()) + " of " +
                                  std::to_string(count) + " sets (s=" + std::to_string(universe) +
                                  ", r=" + std::to_string(set_size) + ", k=" + std::to_string(max_intersection) + ")");
}

BitVec nw_generate(const BooleanFunction& h, const Design& design, const BitVec& seed) {
  require(seed.size() == design.universe, ErrorCode::ShapeMismatch,
          "seed has " + std::to_string(seed.size()) + " bits, design universe is " + std::to_string(design.universe));
  require(h.arity() == design.set_size, ErrorCode::ShapeMismatch, "hard function arity differs from set size");
  BitVec out(design.sets.size());
  const std::uint64_t s = seed.word();
  for (std::size_t i = 0; i < design.sets.size(); ++i) out.set(i, h(gather_bits(s, design.members(i))));
  return out;
}

Generator::Generator(unsigned seed_length, unsigned output_length, nlohmann::ordered_json descriptor, Fn fn,
                     WordFn word)
    : seed_len_(seed_length),
      out_len_(output_length),
      descriptor_(std::move(descriptor)),
      fn_(std::move(fn)),
      word_(std::move(word)) {}

Generator Generator::identity(unsigned n) {
  return {n, n, {{"kind", "identity"}, {"n", n}, {"seed_len", n}}, [](const BitVec& s) { return s; },
          [](std::uint64_t s) { return s; }};
}

Generator Generator::constant(unsigned n, std::uint64_t value, unsigned seed_length) {
  require(n <= kWordBits, ErrorCode::ArityTooLarge, "constant generator limited to 64 outputs");
  value &= low_mask(n);
  return {seed_length, n,
          {{"kind", "constant"}, {"n", n}, {"seed_len", seed_length}, {"value", BitVec(n, value).to_hex()}},
          [n, value](const BitVec&) { return BitVec(n, value); }, [value](std::uint64_t) { return value; }};
}

BitVec Generator::operator()(const BitVec& seed) const {
  require(seed.size() == seed_len_, ErrorCode::ShapeMismatch,
          "seed has " + std::to_string(seed.size()) + " bits, generator expects " + std::to_string(seed_len_));
  return fn_(seed);
}

std::uint64_t Generator::eval_word(std::uint64_t seed) const {
  if (word_) return word_(seed & low_mask(seed_len_));
  require(seed_len_ <= kWordBits && out_len_ <= kWordBits, ErrorCode::ArityTooLarge,
          "word evaluation needs seed and output of at most 64 bits");
  return fn_(BitVec(seed_len_, seed)).word();
}

JuntaPrgShape junta_prg_shape(unsigned n, unsigned d, double eps, const JuntaPrgConstants& constants) {
  require(n >= 2 && n <= kWordBits, ErrorCode::ParameterOutOfRange, "junta PRG output length must be 2..64");
  require(d >= 1 && d <= n, ErrorCode::ParameterOutOfRange, "junta width must lie in [1, n]");
  require(eps > 0.0 && eps < 1.0, ErrorCode::InvalidProbability, "eps must lie in (0, 1)");
  JuntaPrgShape s;
  const double raw =
      d * constants.C * std::log2(1.0 / eps) * std::exp2(constants.c * std::sqrt(std::log2(static_cast<double>(n))));
  require(raw < 1e6, ErrorCode::Infeasible, "junta PRG set size is astronomically large");
  s.r_raw = std::max(1U, static_cast<unsigned>(std::ceil(raw - 1e-9)));
  s.k = ceil_log2(n);
  s.parity_block = d * s.k;
  s.r = (s.r_raw + s.parity_block - 1) / s.parity_block * s.parity_block;
  s.blocks = s.r / s.parity_block;
  return s;
}

BooleanFunction junta_prg_outer(const std::string& family, unsigned blocks) {
  require(blocks >= 1, ErrorCode::ParameterOutOfRange, "outer function needs at least one block");
  const std::string f = family == "auto" ? (blocks == 1 ? "parity" : "ip") : family;
  if (f == "parity") return BooleanFunction::parity(blocks);
  if (f == "ip") {
    return {blocks, [blocks](std::uint64_t y) {
              bool acc = false;
              for (unsigned i = 0; i + 1 < blocks; i += 2) acc ^= bit_of(y, i) && bit_of(y, i + 1);
              if (blocks % 2 == 1) acc ^= bit_of(y, blocks - 1);
              return acc;
            }};
  }
  fail(ErrorCode::UnknownDescriptor, "unknown junta PRG hard function '" + family + "'");
}

Generator junta_prg(unsigned n, unsigned d, double eps, const std::string& hard, const JuntaPrgConstants& constants) {
  const auto shape = junta_prg_shape(n, d, eps, constants);
  require(shape.r <= kWordBits, ErrorCode::Infeasible,
          "set size " + std::to_string(shape.r) + " exceeds the 64-point design universe");
  Design design;
  bool found = false;
  for (unsigned s = shape.r; s <= kWordBits && !found; ++s) {
    try {
      design = build_design(n, s, shape.r, shape.k);
      found = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Infeasible) throw;
    }
  }
  require(found, ErrorCode::Infeasible,
          "no design with " + std::to_string(n) + " sets of size " + std::to_string(shape.r) +
              " and intersections <= " + std::to_string(shape.k) + " fits in 64 points");
  design.check();
  const auto outer = junta_prg_outer(hard, shape.blocks);
  auto h = compose_ext(outer, BlockMap::parity(shape.blocks, shape.parity_block), 1);
  if (shape.r <= kMaterializeMaxArity) h = h.materialize();
  nlohmann::ordered_json desc = {
      {"kind", "nw"},
      {"n", n},
      {"seed_len", design.universe},
      {"design", design_json(design)},
      {"hard_fn", {{"family", hard}, {"outer", hard == "auto" ? (shape.blocks == 1 ? "parity" : "ip") : hard},
                   {"blocks", shape.blocks}, {"parity_block", shape.parity_block}}},
      {"constants", {{"C", constants.C}, {"c", constants.c}, {"d", d}, {"eps", eps}, {"r_raw", shape.r_raw},
                     {"r", shape.r}, {"k", shape.k}}},
      {"rounds", 0}};
  std::vector<std::vector<unsigned>> members;
  for (std::size_t i = 0; i < design.sets.size(); ++i) members.push_back(design.members(i));
  auto word = [h, members](std::uint64_t seed) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      out |= static_cast<std::uint64_t>(h(gather_bits(seed, members[i]))) << i;
    return out;
  };
  const unsigned s = design.universe;
  return {s, n, std::move(desc), [word, n](const BitVec& seed) { return BitVec(n, word(seed.word())); }, word};
}

double bp2_eps_prime(double eps, unsigned t) { return eps / ((t + 1) / 2.0); }

Generator bp2_prg(unsigned n, unsigned d, unsigned t, double eps, const std::string& hard,
                  const JuntaPrgConstants& constants) {
  require(t >= 1, ErrorCode::ParameterOutOfRange, "branching program length must be >= 1");
  auto g = junta_prg(n, d, bp2_eps_prime(eps, t), hard, constants);
  auto desc = g.descriptor();
  desc["bp2"] = {{"t", t}, {"eps", eps}, {"eps_prime", bp2_eps_prime(eps, t)}};
  return {g.seed_length(), g.output_length(), std::move(desc), [g](const BitVec& s) { return g(s); },
          [g](std::uint64_t s) { return g.eval_word(s); }};
}

unsigned pseudorestriction_ell(unsigned n, double delta, const PseudorestrictionConfig& config) {
  require(delta > 0.0 && delta <= 1.0, ErrorCode::InvalidProbability, "delta must lie in (0, 1]");
  const double v = config.c_ell * std::log2(static_cast<double>(n) / delta);
  return std::max(1U, static_cast<unsigned>(std::ceil(v - 1e-9)));
}

PseudorestrictionSampler::PseudorestrictionSampler(unsigned n, unsigned d, double delta,
                                                   const PseudorestrictionConfig& config)
    : PseudorestrictionSampler(n, d, pseudorestriction_ell(n, delta, config), delta,
                               {{"kind", "pseudorestriction"},
                                {"n", n},
                                {"d", d},
                                {"delta", delta},
                                {"c_ell", config.c_ell}}) {}

PseudorestrictionSampler::PseudorestrictionSampler(unsigned n, unsigned d, unsigned ell, double delta,
                                                   nlohmann::ordered_json descriptor)
    : n_(n),
      d_(ber_rounded_d(d)),
      ell_(ell),
      delta_(delta),
      z_(n, d, ell, delta / (2.0 * n)),
      descriptor_(std::move(descriptor)) {
  require(n >= 1 && n <= kWordBits, ErrorCode::ParameterOutOfRange, "pseudorestrictions limited to 1..64 cells");
  descriptor_["ell"] = ell_;
  descriptor_["d_rounded"] = d_;
  descriptor_["seed_len"] = seed_length();
}

PseudorestrictionSampler PseudorestrictionSampler::all_star(unsigned n) {
  PseudorestrictionSampler s(n, 1, 1, 1.0, {{"kind", "all_star"}, {"n", n}});
  s.all_star_ = true;
  s.descriptor_["seed_len"] = 0;
  s.descriptor_.erase("ell");
  s.descriptor_.erase("d_rounded");
  return s;
}

Restriction PseudorestrictionSampler::operator()(const BitVec& seed) const {
  if (all_star_) return Restriction(n_);
  require(seed.size() == seed_length(), ErrorCode::ShapeMismatch, "pseudorestriction seed length mismatch");
  const BitVec u = seed.slice(0, n_);
  const BitVec z = z_.sample(seed.slice(n_, z_.seed_length()));
  return star_merge(u, z);
}

Restriction sample_pseudorestriction(unsigned n, unsigned d, double delta, const BitVec& seed,
                                     const PseudorestrictionConfig& config) {
  return PseudorestrictionSampler(n, d, delta, config)(seed);
}

namespace {

unsigned sampler_seed(const PseudorestrictionSampler& s) {
  return s.descriptor().value("kind", "") == "all_star" ? 0 : s.seed_length();
}

// Fixes coordinates round by round; returns the trace and writes values into `out`.
std::vector<unsigned> aw_fill(const PseudorestrictionSampler& sampler, unsigned rounds, const BitVec& seed,
                              BitVec* out, const Generator* base) {
  const unsigned n = sampler.length();
  const unsigned per = sampler_seed(sampler);
  std::vector<unsigned> trace(n, rounds);
  std::vector<bool> alive(n, true);
  for (unsigned j = 0; j < rounds; ++j) {
    const auto rho = sampler(seed.slice(static_cast<std::size_t>(j) * per, per));
    for (unsigned i = 0; i < n; ++i) {
      if (!alive[i] || rho[i] == Cell::Star) continue;
      alive[i] = false;
      trace[i] = j;
      if (out) out->set(i, rho[i] == Cell::One);
    }
  }
  if (out && base) {
    const std::size_t offset = static_cast<std::size_t>(rounds) * per;
    const BitVec y = (*base)(seed.slice(offset, base->seed_length()));
    for (unsigned i = 0; i < n; ++i)
      if (alive[i]) out->set(i, y.get(i));
  }
  return trace;
}

}  // namespace

std::vector<unsigned> aw_trace(const PseudorestrictionSampler& sampler, unsigned rounds, const BitVec& seed) {
  require(seed.size() >= static_cast<std::size_t>(rounds) * sampler_seed(sampler), ErrorCode::ShapeMismatch,
          "seed too short for the requested rounds");
  return aw_fill(sampler, rounds, seed, nullptr, nullptr);
}

Generator aw_prg(const Generator& base, const PseudorestrictionSampler& sampler, unsigned rounds) {
  require(base.output_length() == sampler.length(), ErrorCode::ShapeMismatch,
          "base generator outputs " + std::to_string(base.output_length()) + " bits, sampler restricts " +
              std::to_string(sampler.length()));
  if (rounds == 0) return base;
  const unsigned per = sampler_seed(sampler);
  const unsigned seed_len = rounds * per + base.seed_length();
  const unsigned n = base.output_length();
  nlohmann::ordered_json desc = {{"kind", "aw"},          {"n", n},
                                 {"seed_len", seed_len},  {"rounds", rounds},
                                 {"sampler", sampler.descriptor()}, {"base", base.descriptor()}};
  return {seed_len, n, std::move(desc), [base, sampler, rounds, n](const BitVec& seed) {
            BitVec out(n);
            aw_fill(sampler, rounds, seed, &out, &base);
            return out;
          }};
}

}  // namespace plab
