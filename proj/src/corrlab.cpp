#include "plab/corrlab.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "plab/error.hpp"
#include "plab/hardfn.hpp"

namespace plab {
namespace {

using i128 = __int128;

double ratio(i128 num, i128 den) {
  if (num < 0) num = -num;
  return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

std::int64_t sign_sum(const BooleanFunction& f, const ExecPolicy& policy) {
  return parallel_sum(std::uint64_t{1} << f.arity(), policy, [&](std::uint64_t b, std::uint64_t e) {
    std::int64_t s = 0;
    for (std::uint64_t x = b; x < e; ++x) s += f(x) ? -1 : 1;
    return s;
  });
}

// A k-bounded junta over r bits stored as (support mask, table word).
struct SmallJunta {
  std::uint64_t support;
  std::uint64_t table;
  std::vector<unsigned> positions;
  bool operator()(std::uint64_t x) const noexcept { return ((table >> gather_bits(x, positions)) & 1U) != 0; }
};

bool depends_on_all(std::uint64_t table, unsigned w) {
  for (unsigned j = 0; j < w; ++j) {
    bool dep = false;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << w) && !dep; ++y)
      if (!bit_of(y, j)) dep = bit_of(table, static_cast<unsigned>(y)) != bit_of(table, static_cast<unsigned>(y | (1U << j)));
    if (!dep) return false;
  }
  return true;
}

std::vector<SmallJunta> enumerate_small_juntas(unsigned n, unsigned width) {
  require(width <= 4, ErrorCode::BudgetExceeded, "junta classes are enumerated up to width 4");
  require(n <= kWordBits, ErrorCode::ArityTooLarge, "junta class arity above 64");
  std::vector<SmallJunta> out;
  for (unsigned w = 0; w <= std::min(width, n); ++w) {
    std::vector<std::uint64_t> tables;
    const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << w);
    for (std::uint64_t t = 0; t < count; ++t)
      if (depends_on_all(t, w)) tables.push_back(t);
    auto emit = [&](std::uint64_t s) {
      std::vector<unsigned> pos;
      for (unsigned i = 0; i < n; ++i)
        if (bit_of(s, i)) pos.push_back(i);
      for (auto t : tables) out.push_back({s, t, pos});
    };
    if (w == 0) {
      emit(0);
      continue;
    }
    for (std::uint64_t s = low_mask(w); s != 0 && (n == 64 || s < (std::uint64_t{1} << n));) {
      emit(s);
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      if (r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return out;
}

nlohmann::ordered_json small_junta_json(const SmallJunta& j) {
  return {{"support", j.positions}, {"table", BitVec(std::size_t{1} << j.positions.size(), j.table).to_hex()}};
}

nlohmann::ordered_json poly_json(const SparsePolyF2& p) {
  nlohmann::ordered_json mons = nlohmann::ordered_json::array();
  for (auto m : p.monomials()) {
    std::vector<unsigned> v;
    for (unsigned i = 0; i < p.arity(); ++i)
      if (bit_of(m, i)) v.push_back(i);
    mons.push_back(v);
  }
  return {{"monomials", mons}, {"constant", p.constant() ? 1 : 0}};
}

}  // namespace

double hoeffding_radius99(std::uint64_t samples) {
  return samples == 0 ? 1.0 : std::sqrt(2.0 * std::log(200.0) / static_cast<double>(samples));
}

std::int64_t correlation_sum(const BooleanFunction& f, const BooleanFunction& g, const ExecPolicy& policy) {
  require(f.arity() == g.arity(), ErrorCode::ArityMismatch,
          "correlating arities " + std::to_string(f.arity()) + " and " + std::to_string(g.arity()));
  require(f.arity() <= kCorrExactMaxArity, ErrorCode::ArityTooLarge,
          "exact correlation limited to " + std::to_string(kCorrExactMaxArity) + " inputs");
  return parallel_sum(std::uint64_t{1} << f.arity(), policy, [&](std::uint64_t b, std::uint64_t e) {
    std::int64_t s = 0;
    for (std::uint64_t x = b; x < e; ++x) s += f(x) != g(x) ? -1 : 1;
    return s;
  });
}

CorrReport corr_exact(const BooleanFunction& f, const BooleanFunction& g, const ExecPolicy& policy) {
  CorrReport r;
  r.numerator = correlation_sum(f, g, policy);
  r.denominator = std::uint64_t{1} << f.arity();
  r.value = ratio(r.numerator, r.denominator);
  return r;
}

CorrReport corr_mc(const BooleanFunction& f, const BooleanFunction& g, std::uint64_t samples, Rng& rng) {
  require(samples >= 1, ErrorCode::ParameterOutOfRange, "Monte Carlo needs at least one sample");
  require(f.arity() == g.arity(), ErrorCode::ArityMismatch, "correlating functions of different arity");
  std::int64_t s = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t x = random_bits(rng, f.arity());
    s += f(x) != g(x) ? -1 : 1;
  }
  CorrReport r;
  r.mode = Mode::MonteCarlo;
  r.samples = samples;
  r.radius = hoeffding_radius99(samples);
  r.numerator = s;
  r.denominator = samples;
  r.value = ratio(s, samples);
  return r;
}

AdversaryClass::AdversaryClass(std::string name, unsigned arity, std::uint64_t size, Member member,
                               Describe describe, nlohmann::ordered_json config)
    : name_(std::move(name)),
      arity_(arity),
      size_(size),
      member_(std::move(member)),
      describe_(std::move(describe)),
      config_(std::move(config)) {}

AdversaryClass AdversaryClass::juntas(unsigned n, unsigned width) {
  auto all = std::make_shared<const std::vector<SmallJunta>>(enumerate_small_juntas(n, width));
  return {"juntas", n, all->size(),
          [all, n](std::uint64_t i) {
            const SmallJunta j = all->at(i);
            return BooleanFunction(n, [j](std::uint64_t x) { return j(x); });
          },
          [all](std::uint64_t i) { return small_junta_json(all->at(i)); },
          {{"class", "juntas"}, {"n", n}, {"width", width}}};
}

AdversaryClass AdversaryClass::affine(unsigned n) {
  require(n <= 40, ErrorCode::BudgetExceeded, "affine class above 40 variables");
  return {"affine", n, std::uint64_t{2} << n,
          [n](std::uint64_t i) {
            const std::uint64_t a = i & low_mask(n);
            const bool c = (i >> n) & 1U;
            return BooleanFunction(n, [a, c](std::uint64_t x) { return parity(a & x) != c; });
          },
          [n](std::uint64_t i) {
            return nlohmann::ordered_json{{"mask", BitVec(n, i & low_mask(n)).to_string()},
                                          {"constant", (i >> n) & 1U}};
          },
          {{"class", "affine"}, {"n", n}}};
}

AdversaryClass AdversaryClass::set_multilinear(unsigned n, const Partition& partition, unsigned max_degree_exclusive,
                                               std::uint64_t budget) {
  require((partition.covered() & ~low_mask(n)) == 0, ErrorCode::ArityMismatch, "partition exceeds arity");
  std::vector<std::uint64_t> monomials;
  const auto& blocks = partition.blocks();
  // Choose at most one variable from each block, fewer than max_degree_exclusive overall.
  std::function<void(std::size_t, std::uint64_t, unsigned)> walk = [&](std::size_t b, std::uint64_t m, unsigned deg) {
    if (b == blocks.size()) {
      if (m != 0) monomials.push_back(m);
      return;
    }
    walk(b + 1, m, deg);
    if (deg + 1 < max_degree_exclusive)
      for (auto v : blocks[b]) walk(b + 1, m | (std::uint64_t{1} << v), deg + 1);
  };
  walk(0, 0, 0);
  std::sort(monomials.begin(), monomials.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  require(monomials.size() + 1 < 63 && (std::uint64_t{2} << monomials.size()) <= budget, ErrorCode::BudgetExceeded,
          "set-multilinear class has 2^" + std::to_string(monomials.size() + 1) + " members, budget is " +
              std::to_string(budget));
  auto mons = std::make_shared<const std::vector<std::uint64_t>>(std::move(monomials));
  auto poly = [mons, n](std::uint64_t i) {
    std::vector<std::uint64_t> chosen;
    for (std::size_t j = 0; j < mons->size(); ++j)
      if (bit_of(i, static_cast<unsigned>(j + 1))) chosen.push_back((*mons)[j]);
    return SparsePolyF2(n, std::move(chosen), (i & 1U) != 0);
  };
  nlohmann::ordered_json blocks_json = blocks;
  return {"set_multilinear", n, std::uint64_t{2} << mons->size(),
          [poly](std::uint64_t i) { return poly(i).function(); },
          [poly](std::uint64_t i) { return poly_json(poly(i)); },
          {{"class", "set_multilinear"},
           {"n", n},
           {"max_degree_exclusive", max_degree_exclusive},
           {"partition", blocks_json}}};
}

AdversaryClass AdversaryClass::nof_one_bit(unsigned block_bits) {
  require(block_bits >= 1 && block_bits <= 4, ErrorCode::BudgetExceeded, "one-bit protocols enumerated for b <= 4");
  const unsigned b = block_bits;
  const std::uint64_t tables = std::uint64_t{1} << (std::uint64_t{1} << b);
  // First: player 0 speaks after seeing block 1 (all tables). Then player 1,
  // seeing block 0, with the two constants skipped as duplicates.
  auto decode = [b, tables](std::uint64_t i) {
    if (i < tables) return std::pair<unsigned, std::uint64_t>{1, i};
    std::uint64_t t = i - tables + 1;
    return std::pair<unsigned, std::uint64_t>{0, t};
  };
  return {"nof_one_bit", 2 * b, 2 * tables - 2,
          [decode, b](std::uint64_t i) {
            const auto [block, table] = decode(i);
            return BooleanFunction(2 * b, [block, table, b](std::uint64_t x) {
              return bit_of(table, static_cast<unsigned>((x >> (block * b)) & low_mask(b)));
            });
          },
          [decode, b](std::uint64_t i) {
            const auto [block, table] = decode(i);
            return nlohmann::ordered_json{{"speaker", 1 - block},
                                          {"reads_block", block},
                                          {"table", BitVec(std::size_t{1} << b, table).to_hex()}};
          },
          {{"class", "nof_one_bit"}, {"parties", 2}, {"block_bits", b}, {"bits", 1}}};
}

AdversaryClass AdversaryClass::junta_composition(const BooleanFunction& f, unsigned r, unsigned k,
                                                 std::uint64_t budget) {
  auto base = std::make_shared<const std::vector<SmallJunta>>(enumerate_small_juntas(r, k));
  const unsigned n = f.arity();
  long double size = 1;
  for (unsigned t = 0; t < n; ++t) size *= static_cast<long double>(base->size());
  require(size <= static_cast<long double>(budget), ErrorCode::BudgetExceeded,
          "junta-composition class has " + std::to_string(static_cast<double>(size)) + " members");
  const auto count = static_cast<std::uint64_t>(size);
  auto outer = f.arity() <= kMaterializeMaxArity ? f.materialize() : f;
  auto pick = [base, n](std::uint64_t i) {
    std::vector<SmallJunta> js;
    for (unsigned t = 0; t < n; ++t) {
      js.push_back((*base)[i % base->size()]);
      i /= base->size();
    }
    return js;
  };
  return {"junta_composition", r, count,
          [pick, outer, r](std::uint64_t i) {
            const auto js = pick(i);
            return BooleanFunction(r, [js, outer](std::uint64_t z) {
              std::uint64_t y = 0;
              for (std::size_t t = 0; t < js.size(); ++t) y |= static_cast<std::uint64_t>(js[t](z)) << t;
              return outer(y);
            });
          },
          [pick](std::uint64_t i) {
            nlohmann::ordered_json inner = nlohmann::ordered_json::array();
            for (const auto& j : pick(i)) inner.push_back(small_junta_json(j));
            return nlohmann::ordered_json{{"inner", inner}};
          },
          {{"class", "junta_composition"}, {"outer_arity", n}, {"r", r}, {"k", k}}};
}

AdversaryClass AdversaryClass::sparse_sampled(unsigned n, unsigned degree, unsigned terms, std::uint64_t samples,
                                              std::uint64_t seed) {
  require(degree <= n && n <= kWordBits, ErrorCode::ParameterOutOfRange, "degree must not exceed arity");
  Rng rng(seed);
  auto polys = std::make_shared<std::vector<SparsePolyF2>>();
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<std::uint64_t> mons;
    for (unsigned t = 0; t < terms; ++t) {
      const auto deg = static_cast<unsigned>(uniform_below(rng, degree + 1));
      std::uint64_t m = 0;
      while (static_cast<unsigned>(std::popcount(m)) < deg) m |= std::uint64_t{1} << uniform_below(rng, n);
      mons.push_back(m);
    }
    polys->emplace_back(n, std::move(mons), (rng() & 1U) != 0);
  }
  return {"sparse_sampled", n, samples, [polys](std::uint64_t i) { return polys->at(i).function(); },
          [polys](std::uint64_t i) { return poly_json(polys->at(i)); },
          {{"class", "sparse_sampled"}, {"n", n}, {"degree", degree}, {"terms", terms},
           {"samples", samples}, {"seed", seed}}};
}

AdversaryClass AdversaryClass::list(std::string name, std::vector<BooleanFunction> members) {
  require(!members.empty(), ErrorCode::ParameterOutOfRange, "empty adversary list");
  const unsigned n = members.front().arity();
  for (const auto& g : members) require(g.arity() == n, ErrorCode::ArityMismatch, "class members disagree on arity");
  auto all = std::make_shared<const std::vector<BooleanFunction>>(std::move(members));
  return {name, n, all->size(), [all](std::uint64_t i) { return all->at(i); },
          [](std::uint64_t i) { return nlohmann::ordered_json{{"index", i}}; },
          {{"class", "list"}, {"name", name}, {"size", all->size()}}};
}

CorrReport corr_class_max(const BooleanFunction& f, const AdversaryClass& c, const ExecPolicy& policy,
                          std::uint64_t budget) {
  require(f.arity() == c.arity(), ErrorCode::ArityMismatch,
          "function arity " + std::to_string(f.arity()) + " differs from class arity " + std::to_string(c.arity()));
  require(f.arity() <= kCorrExactMaxArity, ErrorCode::ArityTooLarge, "class search limited to 28 inputs");
  const long double cost = static_cast<long double>(c.size()) * static_cast<long double>(std::uint64_t{1} << f.arity());
  require(cost <= static_cast<long double>(budget), ErrorCode::BudgetExceeded,
          "class '" + c.name() + "' needs " + std::to_string(static_cast<double>(cost)) +
              " evaluations, budget is " + std::to_string(budget));
  const auto ft = f.arity() <= kMaterializeMaxArity ? f.materialize() : f;
  std::int64_t best = -1;
  std::uint64_t arg = 0;
  for (std::uint64_t i = 0; i < c.size(); ++i) {
    const std::int64_t s = correlation_sum(ft, c.member(i), policy);
    const std::int64_t a = s < 0 ? -s : s;
    if (a > best) {
      best = a;
      arg = i;
    }
  }
  CorrReport r;
  r.numerator = best;
  r.denominator = std::uint64_t{1} << f.arity();
  r.value = ratio(best, r.denominator);
  r.argmax = arg;
  r.argmax_descriptor = c.describe(arg);
  return r;
}

CorrReport kparty_norm(const BooleanFunction& f, unsigned k, unsigned b, const ExecPolicy& policy,
                       std::uint64_t mc_samples, std::uint64_t mc_seed) {
  require(k >= 1 && f.arity() == k * b, ErrorCode::ArityMismatch,
          "function arity " + std::to_string(f.arity()) + " is not k*b = " + std::to_string(k * b));
  const unsigned kb = k * b;
  auto cube = [&f, k, b](std::uint64_t x0, std::uint64_t x1) {
    bool acc = false;
    for (std::uint64_t delta = 0; delta < (std::uint64_t{1} << k); ++delta) {
      std::uint64_t x = 0;
      for (unsigned j = 0; j < k; ++j) {
        const std::uint64_t src = bit_of(delta, j) ? x1 : x0;
        x |= src & (low_mask(b) << (j * b));
      }
      acc ^= f(x);
    }
    return acc;
  };
  CorrReport r;
  if (2 * kb <= kNormExactMaxBits) {
    const auto ft = f.materialize();
    const std::int64_t s = parallel_sum(std::uint64_t{1} << (2 * kb), policy, [&](std::uint64_t lo, std::uint64_t hi) {
      std::int64_t acc = 0;
      for (std::uint64_t t = lo; t < hi; ++t) acc += cube(t & low_mask(kb), t >> kb) ? -1 : 1;
      return acc;
    });
    r.numerator = s;
    r.denominator = std::uint64_t{1} << (2 * kb);
    r.value = static_cast<double>(static_cast<long double>(s) / static_cast<long double>(r.denominator));
    return r;
  }
  require(mc_samples > 0, ErrorCode::ArityTooLarge,
          "exact k-party norm needs 2kb <= " + std::to_string(kNormExactMaxBits) + "; pass a sample count");
  Rng rng(mc_seed);
  std::int64_t s = 0;
  for (std::uint64_t i = 0; i < mc_samples; ++i) {
    const std::uint64_t x0 = random_bits(rng, kb);
    const std::uint64_t x1 = random_bits(rng, kb);
    s += cube(x0, x1) ? -1 : 1;
  }
  r.mode = Mode::MonteCarlo;
  r.samples = mc_samples;
  r.radius = hoeffding_radius99(mc_samples);
  r.numerator = s;
  r.denominator = mc_samples;
  r.value = static_cast<double>(s) / static_cast<double>(mc_samples);
  return r;
}

CorrReport fooling_error(const Generator& g, const BooleanFunction& f, const ExecPolicy& policy,
                         std::uint64_t mc_samples, std::uint64_t mc_seed) {
  require(g.output_length() == f.arity(), ErrorCode::ArityMismatch,
          "generator outputs " + std::to_string(g.output_length()) + " bits, function reads " +
              std::to_string(f.arity()));
  const unsigned n = f.arity();
  const unsigned s = g.seed_length();
  CorrReport r;
  if (s <= kFoolingExactMaxSeed && n <= kFoolingExactMaxArity) {
    const auto ft = f.materialize();
    const std::int64_t a = sign_sum(ft, policy);
    const std::int64_t b = parallel_sum(std::uint64_t{1} << s, policy, [&](std::uint64_t lo, std::uint64_t hi) {
      std::int64_t acc = 0;
      for (std::uint64_t seed = lo; seed < hi; ++seed) acc += ft(g.eval_word(seed)) ? -1 : 1;
      return acc;
    });
    const i128 num = static_cast<i128>(a) * (i128{1} << s) - static_cast<i128>(b) * (i128{1} << n);
    r.numerator = static_cast<std::int64_t>(num);
    r.denominator = std::uint64_t{1} << (n + s);
    r.value = ratio(num, r.denominator);
    return r;
  }
  require(mc_samples > 0, ErrorCode::ParameterOutOfRange, "Monte Carlo fooling error needs samples");
  require(n <= kWordBits, ErrorCode::ArityTooLarge, "fooling error limited to 64-bit outputs");
  Rng rng(mc_seed);
  std::int64_t a = 0;
  std::int64_t b = 0;
  for (std::uint64_t i = 0; i < mc_samples; ++i) {
    a += f(random_bits(rng, n)) ? -1 : 1;
    b += f(g(random_bitvec(rng, s)).word()) ? -1 : 1;
  }
  r.mode = Mode::MonteCarlo;
  r.samples = mc_samples;
  r.radius = 2.0 * hoeffding_radius99(mc_samples);
  r.numerator = a - b;
  r.denominator = mc_samples;
  r.value = ratio(a - b, mc_samples);
  return r;
}

Distribution Distribution::uniform(unsigned bits) {
  require(bits <= kNormExactMaxBits, ErrorCode::ArityTooLarge, "distribution support too large");
  return {bits, std::vector<std::uint64_t>(std::size_t{1} << bits, 1)};
}

Distribution Distribution::point(unsigned bits, std::uint64_t value) {
  require(bits <= kNormExactMaxBits, ErrorCode::ArityTooLarge, "distribution support too large");
  require(value < (std::uint64_t{1} << bits), ErrorCode::ParameterOutOfRange, "point mass outside the support");
  Distribution d{bits, std::vector<std::uint64_t>(std::size_t{1} << bits, 0)};
  d.counts[value] = 1;
  return d;
}

std::uint64_t Distribution::total() const noexcept {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

double tv_distance(const Distribution& a, const Distribution& b) {
  require(a.bits == b.bits && a.counts.size() == b.counts.size(), ErrorCode::SupportMismatch,
          "distributions over " + std::to_string(a.bits) + " and " + std::to_string(b.bits) + " bits");
  const std::uint64_t ta = a.total();
  const std::uint64_t tb = b.total();
  require(ta > 0 && tb > 0, ErrorCode::ParameterOutOfRange, "distribution with zero total weight");
  i128 num = 0;
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    const i128 d = static_cast<i128>(a.counts[i]) * tb - static_cast<i128>(b.counts[i]) * ta;
    num += d < 0 ? -d : d;
  }
  return static_cast<double>(static_cast<long double>(num) /
                             (2.0L * static_cast<long double>(ta) * static_cast<long double>(tb)));
}

double extffm_corr_bound(unsigned d, unsigned k, double eps) {
  return d * eps + (d - 1.0) * (1.0 / (std::ldexp(1.0, static_cast<int>(k)) * eps * eps) + eps);
}

SparsePolyF2 anf(const BooleanFunction& f) {
  require(f.arity() <= 20, ErrorCode::ArityTooLarge, "algebraic normal form limited to 20 inputs");
  std::vector<unsigned> support(f.arity());
  for (unsigned i = 0; i < f.arity(); ++i) support[i] = i;
  return junta_to_sparse(Junta(f.arity(), std::move(support), f.table()));
}

BoundCheck check_extffm_bound(unsigned d, unsigned k, double eps, const gf2::FieldSpec& field, unsigned block,
                             const Partition& partition, const AdversaryClass& cls, const ExecPolicy& policy,
                             std::uint64_t budget) {
  const auto f = extffm_seeded_function(d, block, field).materialize();
  require(cls.arity() == f.arity(), ErrorCode::ArityMismatch,
          "class arity " + std::to_string(cls.arity()) + " differs from ExtFFM arity " + std::to_string(f.arity()));
  for (std::uint64_t i = 0; i < cls.size(); ++i) {
    const auto p = anf(cls.member(i));
    require(p.degree() < d, ErrorCode::HypothesisViolation,
            "class member " + std::to_string(i) + " has degree " + std::to_string(p.degree()) + " >= d");
    bool ok = false;
    try {
      ok = is_set_multilinear(p, partition);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UncoveredVariable) throw;
    }
    require(ok, ErrorCode::HypothesisViolation,
            "class member " + std::to_string(i) + " is not set-multilinear over the partition");
  }
  BoundCheck out;
  out.report = corr_class_max(f, cls, policy, budget);
  out.measured = out.report.value;
  out.bound = extffm_corr_bound(d, k, eps);
  out.slack = out.bound - out.measured;
  out.pass = out.measured <= out.bound;
  out.vacuous = out.bound >= 1.0;
  out.config = {{"d", d}, {"k", k}, {"eps", eps}, {"block", block}, {"field_width", field.width()},
                {"class", cls.config()}};
  return out;
}

std::vector<std::vector<unsigned>> set_multilinear_alive_sets(unsigned n, unsigned d, const Partition& parts) {
  require(d >= 1 && n % d == 0 && n <= kWordBits, ErrorCode::ShapeMismatch, "d must divide n <= 64");
  const unsigned b = n / d;
  std::vector<std::vector<unsigned>> out;
  for (unsigned i = 0; i < d; ++i) {
    const std::uint64_t xi = low_mask(b) << (i * b);
    std::uint64_t best = 0;
    for (auto m : parts.masks())
      if (std::popcount(m & xi) > std::popcount(best)) best = m & xi;
    std::vector<unsigned> s;
    for (unsigned v = 0; v < n; ++v)
      if (bit_of(best, v)) s.push_back(v);
    out.push_back(std::move(s));
  }
  return out;
}

LiftingReport bp2_lifting_check(const Generator& g, const BranchingProgram2& b) {
  const auto dec = decompose_2bp(b);
  const unsigned n = b.arity;
  const unsigned s = g.seed_length();
  const auto L = static_cast<unsigned>(dec.juntas.size());
  require(g.output_length() == n, ErrorCode::ArityMismatch, "generator and program disagree on n");
  require(n <= kFoolingExactMaxArity && s <= kFoolingExactMaxSeed, ErrorCode::ArityTooLarge,
          "lifting check enumerates seeds and inputs up to 24 bits");
  require(L <= kFourierMaxArity, ErrorCode::ArityTooLarge, "core program too long for its Fourier expansion");
  // Histograms of phi(x) over uniform inputs and over generator outputs.
  std::vector<std::int64_t> hu(std::size_t{1} << L, 0), hg(std::size_t{1} << L, 0);
  std::int64_t cu = 0, cg = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    ++hu[dec.lift(x)];
    cu += b(x);
  }
  for (std::uint64_t seed = 0; seed < (std::uint64_t{1} << s); ++seed) {
    const std::uint64_t x = g.eval_word(seed);
    ++hg[dec.lift(x)];
    cg += b(x);
  }
  auto wht = [](std::vector<std::int64_t>& v) {
    for (std::size_t h = 1; h < v.size(); h <<= 1)
      for (std::size_t i = 0; i < v.size(); i += 2 * h)
        for (std::size_t j = i; j < i + h; ++j) {
          const auto a = v[j], c = v[j + h];
          v[j] = a + c;
          v[j + h] = a - c;
        }
  };
  wht(hu);
  wht(hg);
  i128 worst = 0;
  std::uint64_t arg = 0;
  for (std::size_t S = 1; S < hu.size(); ++S) {
    i128 d = static_cast<i128>(hu[S]) * (i128{1} << s) - static_cast<i128>(hg[S]) * (i128{1} << n);
    if (d < 0) d = -d;
    if (d > worst) {
      worst = d;
      arg = S;
    }
  }
  const auto spectrum = fourier_expand(dec.core.function());
  i128 gap = static_cast<i128>(cu) * (i128{1} << s) - static_cast<i128>(cg) * (i128{1} << n);
  if (gap < 0) gap = -gap;
  LiftingReport r;
  const i128 den = i128{1} << (n + s);
  r.gap = ratio(gap, den);
  r.l1_core = spectrum.l1();
  r.junta_error = ratio(worst, den);
  r.junta_argmax = arg;
  r.bound = r.l1_core * r.junta_error;
  // gap <= L1 * worst, both over 2^{n+s}; L1 carries a 2^L scale.
  r.pass = gap * (i128{1} << L) <= static_cast<i128>(spectrum.l1_scaled()) * worst;
  return r;
}

}  // namespace plab
