#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "plab/cli.hpp"
#include "plab/corrlab.hpp"
#include "plab/descriptors.hpp"
#include "plab/error.hpp"
#include "plab/extractors.hpp"
#include "plab/hardfn.hpp"
#include "plab/models.hpp"
#include "plab/prg.hpp"

namespace plab::cli {
namespace {

using desc::Json;

template <typename T>
T need(const Json& j, const char* key) {
  require(j.contains(key), ErrorCode::ParseError, std::string("measurement is missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad value for '") + key + "': " + e.what());
  }
}

template <typename T>
T opt(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? need<T>(j, key) : fallback;
}

const Json& sub(const Json& j, const char* key) {
  require(j.contains(key), ErrorCode::ParseError, std::string("measurement is missing '") + key + "'");
  return j.at(key);
}

std::uint64_t seed_of(const MeasureContext& ctx, const std::string& op) {
  require(ctx.seed.has_value(), ErrorCode::ParameterOutOfRange, op + " is randomized and needs a seed (--seed)");
  return *ctx.seed;
}

double ratio(unsigned __int128 num, unsigned __int128 den) {
  return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

// num / den with den a power of two times small factors; kept as a pair.
struct Frac {
  unsigned __int128 num = 0;
  unsigned __int128 den = 1;
  bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
};

Json frac_json(const Frac& f) {
  return {{"value", ratio(f.num, f.den)},
          {"numerator", static_cast<std::uint64_t>(f.num)},
          {"denominator", static_cast<std::uint64_t>(f.den)}};
}

// TV of a histogram over 2^m cells holding 2^k points against uniform.
Frac tv_from_hist(const std::uint32_t* h, unsigned m, unsigned k) {
  unsigned __int128 num = 0;
  const std::uint64_t target = std::uint64_t{1} << k;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
    const std::uint64_t have = static_cast<std::uint64_t>(h[v]) << m;
    num += have > target ? have - target : target - have;
  }
  return {num, static_cast<unsigned __int128>(2) << (k + m)};
}

Json op_corr_exact(const Json& m, const MeasureContext& ctx) {
  return desc::corr_report_to_json(
      corr_exact(desc::function_from_json(sub(m, "f")), desc::function_from_json(sub(m, "g")), ctx.policy));
}

Json op_corr_mc(const Json& m, const MeasureContext& ctx) {
  Rng rng(seed_of(ctx, "corr_mc"));
  return desc::corr_report_to_json(corr_mc(desc::function_from_json(sub(m, "f")),
                                           desc::function_from_json(sub(m, "g")),
                                           need<std::uint64_t>(m, "samples"), rng));
}

Json op_corr_class_max(const Json& m, const MeasureContext& ctx) {
  return desc::corr_report_to_json(corr_class_max(desc::function_from_json(sub(m, "f")),
                                                  desc::class_from_json(sub(m, "class")), ctx.policy,
                                                  opt<std::uint64_t>(m, "budget", kDefaultClassBudget)));
}

Json op_kparty_norm(const Json& m, const MeasureContext& ctx) {
  const auto samples = opt<std::uint64_t>(m, "samples", 0);
  const std::uint64_t seed = samples > 0 ? seed_of(ctx, "kparty_norm") : 0;
  return desc::corr_report_to_json(kparty_norm(desc::function_from_json(sub(m, "f")), need<unsigned>(m, "k"),
                                               need<unsigned>(m, "b"), ctx.policy, samples, seed));
}

Json op_fooling_error(const Json& m, const MeasureContext& ctx) {
  const auto g = desc::generator_from_json(sub(m, "generator"));
  const auto f = desc::function_from_json(sub(m, "f"));
  const bool exact = g.seed_length() <= kFoolingExactMaxSeed && f.arity() <= kFoolingExactMaxArity;
  const std::uint64_t seed = exact ? 0 : seed_of(ctx, "fooling_error (Monte Carlo)");
  auto j = desc::corr_report_to_json(fooling_error(g, f, ctx.policy, opt<std::uint64_t>(m, "samples", 100000), seed));
  j["seed_len"] = g.seed_length();
  return j;
}

Json op_tv(const Json& m, const MeasureContext&) {
  const auto a = desc::distribution_from_json(sub(m, "a"));
  auto bj = sub(m, "b");
  const auto b = bj.is_string() ? desc::distribution_from_string(bj.get<std::string>(), a.bits)
                                : desc::distribution_from_json(bj);
  return {{"value", tv_distance(a, b)}, {"bits", a.bits}};
}

Json op_design(const Json& m, const MeasureContext&) {
  const auto d = build_design(need<unsigned>(m, "count"), need<unsigned>(m, "universe"), need<unsigned>(m, "set_size"),
                              need<unsigned>(m, "max_intersection"));
  d.check();
  return {{"design", desc::design_to_json(d)}, {"pass", true}};
}

Json op_field_oracle(const Json& m, const MeasureContext&) {
  const auto widths = opt<std::vector<unsigned>>(m, "widths", {2, 4, 8});
  std::uint64_t pairs = 0, mismatches = 0, axiom_failures = 0, missing_inverses = 0;
  Json per = Json::array();
  for (unsigned w : widths) {
    require(w >= 1 && w <= 10, ErrorCode::ParameterOutOfRange, "field_oracle checks widths 1..10");
    const auto f = gf2::FieldSpec::standard(w);
    const std::uint64_t q = f.size();
    for (std::uint64_t a = 0; a < q; ++a) {
      bool has_inverse = a == 0;
      for (std::uint64_t b = 0; b < q; ++b) {
        ++pairs;
        const auto ab = f.mul(a, b);
        mismatches += ab != f.mul_reference(a, b);
        axiom_failures += ab != f.mul(b, a);
        has_inverse = has_inverse || ab == 1;
        if (w <= 4)
          for (std::uint64_t c = 0; c < q; ++c) {
            axiom_failures += f.mul(ab, c) != f.mul(a, f.mul(b, c));
            axiom_failures += f.mul(a, b ^ c) != (ab ^ f.mul(a, c));
          }
      }
      axiom_failures += f.mul(a, 1) != a;
      missing_inverses += !has_inverse;
    }
    per.push_back({{"width", w}, {"modulus", f.modulus().to_hex()}});
  }
  return {{"fields", per},
          {"pairs", pairs},
          {"mismatches", mismatches},
          {"axiom_failures", axiom_failures},
          {"missing_inverses", missing_inverses},
          {"pass", mismatches == 0 && axiom_failures == 0 && missing_inverses == 0}};
}

Json op_rw_factorization(const Json& m, const MeasureContext&) {
  const auto max_bits = opt<unsigned>(m, "max_bits", 16);
  require(max_bits <= 20, ErrorCode::BudgetExceeded, "rw_factorization limited to 20 bits");
  std::uint64_t shapes = 0, inputs = 0, mismatches = 0;
  for (unsigned mm = 1; mm <= max_bits; ++mm)
    for (unsigned k = 1; mm * k <= max_bits; ++k)
      for (unsigned r = 1; mm * k * r <= max_bits; ++r) {
        ++shapes;
        const auto composed = compose_ext(gip_function(mm, k), BlockMap::parity(mm, r), k);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << (mm * k * r)); ++x, ++inputs)
          mismatches += rw_word(mm, k, r, x) != composed(x);
      }
  return {{"shapes", shapes}, {"inputs", inputs}, {"mismatches", mismatches}, {"pass", mismatches == 0}};
}

Json op_parity_uncorrelation(const Json& m, const MeasureContext& ctx) {
  const auto n = need<unsigned>(m, "n");
  const auto cls = AdversaryClass::juntas(n, need<unsigned>(m, "width"));
  auto j = desc::corr_report_to_json(corr_class_max(BooleanFunction::parity(n), cls, ctx.policy));
  j["class_size"] = cls.size();
  j["pass"] = j["numerator"] == 0;
  return j;
}

Json op_corr_sandwich(const Json& m, const MeasureContext& ctx) {
  const auto f = desc::function_from_json(sub(m, "f"));
  const auto b = need<unsigned>(m, "b");
  const auto norm = kparty_norm(f, 2, b, ctx.policy);
  const auto best = corr_class_max(f, AdversaryClass::nof_one_bit(b), ctx.policy);
  const double upper = 2.0 * std::pow(norm.value, 0.25);
  return {{"r2", desc::corr_report_to_json(norm)},
          {"max_corr", desc::corr_report_to_json(best)},
          {"upper", upper},
          {"pass", norm.value <= best.value && best.value <= upper}};
}

Json op_l1_bound(const Json& m, const MeasureContext& ctx) {
  Rng rng(seed_of(ctx, "l1_bound"));
  const auto count = need<unsigned>(m, "count"), t_max = need<unsigned>(m, "t_max"), n_max = need<unsigned>(m, "n_max");
  require(n_max >= 1 && n_max <= kFourierMaxArity && t_max >= 1, ErrorCode::ParameterOutOfRange,
          "l1_bound needs 1 <= n_max <= 20 and t_max >= 1");
  std::uint64_t violations = 0;
  double worst = 0.0;
  for (unsigned i = 0; i < count; ++i) {
    const auto t = 1 + static_cast<unsigned>(uniform_below(rng, t_max));
    const auto n = 1 + static_cast<unsigned>(uniform_below(rng, n_max));
    const auto b = random_2bp(1, t, n, rng);
    const auto s = fourier_expand(b.function());
    // l1 <= (t+1)/2  <=>  l1_scaled <= (t+1) 2^{n-1}
    const auto limit = static_cast<std::int64_t>(t + 1) << (n - 1);
    violations += s.l1_scaled() * 2 > limit * 2;
    worst = std::max(worst, static_cast<double>(s.l1_scaled()) / static_cast<double>(limit));
  }
  return {{"count", count}, {"violations", violations}, {"worst_ratio", worst}, {"pass", violations == 0}};
}

Json op_bdvy(const Json& m, const MeasureContext& ctx) {
  Rng rng(seed_of(ctx, "bdvy"));
  const auto count = need<unsigned>(m, "count"), d = need<unsigned>(m, "d"), ell = need<unsigned>(m, "ell"),
             n = need<unsigned>(m, "n");
  require(n <= 24, ErrorCode::BudgetExceeded, "bdvy enumerates all inputs; n <= 24");
  std::uint64_t mismatches = 0;
  for (unsigned i = 0; i < count; ++i) {
    const auto b = random_2bp(d, ell, n, rng);
    const auto dec = decompose_2bp(b);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) mismatches += dec.core(dec.lift(x)) != b(x);
  }
  return {{"programs", count}, {"inputs_each", std::uint64_t{1} << n}, {"mismatches", mismatches},
          {"pass", mismatches == 0}};
}

Json op_lhl_certify(const Json& m, const MeasureContext&) {
  const auto n = need<unsigned>(m, "n"), k = need<unsigned>(m, "k"), mm = need<unsigned>(m, "m");
  const auto eps = need<double>(m, "eps");
  require(n <= 10 && mm <= 6 && k <= n && mm <= n, ErrorCode::BudgetExceeded, "lhl_certify enumerates 2^{2n} seeds");
  const std::uint64_t seeds = std::uint64_t{1} << (2 * n);
  std::vector<ToeplitzExtractor> exts;
  exts.reserve(seeds);
  for (std::uint64_t s = 0; s < seeds; ++s) exts.emplace_back(n, mm, BitVec(2 * n, s));
  // Per-seed TV numerators share the denominator 2^{k+m+1}.
  const auto good_limit = static_cast<unsigned __int128>(std::ldexp(eps, static_cast<int>(k + mm + 1)));
  Frac worst_avg{0, 1};
  Frac worst_good{1, 1};
  std::uint64_t sources = 0;
  Json argmax;
  for_each_bit_fixing_source(n, k, [&](const BitFixingSource& src) {
    ++sources;
    std::vector<std::uint64_t> pts(std::size_t{1} << k);
    for (std::uint64_t i = 0; i < pts.size(); ++i) pts[i] = src.point(i);
    unsigned __int128 sum = 0;
    std::uint64_t good = 0;
    for (const auto& ext : exts) {
      std::array<std::uint32_t, 64> h{};
      for (auto x : pts) ++h[ext(x)];
      const auto tv = tv_from_hist(h.data(), mm, k);
      sum += tv.num;
      good += tv.num <= good_limit;
    }
    const Frac avg{sum, static_cast<unsigned __int128>(seeds) << (k + mm + 1)};
    if (worst_avg < avg) {
      worst_avg = avg;
      argmax = {{"free_mask", BitVec(n, src.free_mask()).to_string()},
                {"fixed", BitVec(n, src.fixed_values()).to_string()}};
    }
    const Frac frac{good, seeds};
    if (frac < worst_good) worst_good = frac;
  });
  const bool avg_ok = static_cast<long double>(worst_avg.num) <= static_cast<long double>(eps) * worst_avg.den;
  const bool good_ok =
      static_cast<long double>(worst_good.num) >= static_cast<long double>(1.0 - eps) * worst_good.den;
  return {{"sources", sources},
          {"seeds", seeds},
          {"max_seed_averaged_tv", frac_json(worst_avg)},
          {"worst_source", argmax},
          {"min_good_seed_fraction", frac_json(worst_good)},
          {"pass", avg_ok && good_ok}};
}

Json op_extractor_tv(const Json& m, const MeasureContext&) {
  const auto kind = need<std::string>(m, "kind");
  const auto n = need<unsigned>(m, "n"), k = need<unsigned>(m, "k");
  require(n <= 24 && k <= 20, ErrorCode::BudgetExceeded, "extractor_tv enumerates sources; n <= 24, k <= 20");
  std::function<std::uint64_t(std::uint64_t)> ext;
  unsigned out = 0;
  Json config = {{"kind", kind}, {"n", n}, {"k", k}};
  if (kind == "kz") {
    out = need<unsigned>(m, "m");
    const auto cycle = opt<std::uint64_t>(m, "cycle", kz_default_cycle(out));
    require(out <= 6 && (std::uint64_t{1} << out) <= cycle, ErrorCode::OutputTooLong, "kz output too long");
    ext = [n, cycle, out](std::uint64_t x) { return kz_endpoint(x, n, cycle) & low_mask(out); };
    config["m"] = out;
    config["cycle"] = cycle;
  } else if (kind == "parity_blocks") {
    out = need<unsigned>(m, "m");
    const auto r = need<unsigned>(m, "r");
    require(out * r == n && out <= 6, ErrorCode::ShapeMismatch, "parity_blocks needs n = m * r, m <= 6");
    ext = [out, r](std::uint64_t x) { return parity_blocks_word(out, r, x); };
    config["m"] = out;
    config["r"] = r;
  } else if (kind == "toeplitz") {
    out = need<unsigned>(m, "m");
    require(out <= 6, ErrorCode::OutputTooLong, "toeplitz histogram limited to 6 output bits");
    const ToeplitzExtractor t(n, out, BitVec::from_string(need<std::string>(m, "seed")));
    ext = [t](std::uint64_t x) { return t(x); };
    config["m"] = out;
    config["seed"] = need<std::string>(m, "seed");
  } else {
    fail(ErrorCode::UnknownDescriptor, "unknown extractor kind '" + kind + "'");
  }
  Frac worst{0, 1};
  std::uint64_t sources = 0;
  Json argmax;
  const auto free_filter = opt<std::vector<std::string>>(m, "free_masks", {});
  for_each_bit_fixing_source(n, k, [&](const BitFixingSource& src) {
    if (!free_filter.empty()) {
      const auto mask = BitVec(n, src.free_mask()).to_string();
      if (std::find(free_filter.begin(), free_filter.end(), mask) == free_filter.end()) return;
    }
    ++sources;
    std::array<std::uint32_t, 64> h{};
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); ++i) ++h[ext(src.point(i))];
    const auto tv = tv_from_hist(h.data(), out, k);
    if (worst < tv) {
      worst = tv;
      argmax = {{"free_mask", BitVec(n, src.free_mask()).to_string()},
                {"fixed", BitVec(n, src.fixed_values()).to_string()}};
    }
  });
  auto j = frac_json(worst);
  j["config"] = config;
  j["sources"] = sources;
  j["worst_source"] = argmax;
  return j;
}

Json op_nw_accounting(const Json& m, const MeasureContext& ctx) {
  const auto h = desc::function_from_json(sub(m, "h")).materialize();
  const unsigned r = h.arity(), k = need<unsigned>(m, "k"), n = need<unsigned>(m, "n");
  require(r <= 4, ErrorCode::BudgetExceeded, "nw_accounting takes a hard function on at most 4 bits");
  Design design;
  bool found = false;
  for (unsigned s = r; s <= 24 && !found; ++s) {
    try {
      design = build_design(n, s, r, k);
      found = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Infeasible) throw;
    }
  }
  require(found, ErrorCode::Infeasible, "no design within 24 seed bits");
  const Json gen = {{"kind", "nw_custom"}, {"h", sub(m, "h")}, {"design", desc::design_to_json(design)}};
  const auto g = desc::generator_from_json(gen);

  std::vector<std::pair<Json, BooleanFunction>> targets;
  const auto& tj = sub(m, "targets");
  if (tj.is_string() && tj.get<std::string>() == "all") {
    require(n <= 4, ErrorCode::BudgetExceeded, "'all' targets enumerates 2^{2^n} functions; n <= 4");
    for (std::uint64_t tab = 0; tab < (std::uint64_t{1} << (1U << n)); ++tab) {
      TruthTable t(n);
      for (std::uint64_t x = 0; x < t.size(); ++x) t.set(x, bit_of(tab, static_cast<unsigned>(x)));
      targets.emplace_back(Json{{"table_index", tab}}, BooleanFunction::from_table(std::move(t)));
    }
  } else {
    for (const auto& f : tj) targets.emplace_back(f, desc::function_from_json(f));
  }
  std::uint64_t violations = 0, vacuous = 0;
  double worst_ratio = 0.0;
  Json rows = Json::array();
  for (const auto& [fj, f] : targets) {
    require(f.arity() == n, ErrorCode::ArityMismatch, "target arity must equal the output length");
    const auto hard = corr_class_max(h, AdversaryClass::junta_composition(f, r, k), ctx.policy);
    const auto fool = fooling_error(g, f, ctx.policy);
    const double bound = n * hard.value;
    const bool ok = fool.value <= bound + 1e-12;
    violations += !ok;
    vacuous += bound >= 1.0;
    if (bound > 0) worst_ratio = std::max(worst_ratio, fool.value / bound);
    if (!fj.contains("table_index") || !ok)
      rows.push_back({{"target", fj}, {"eps_h", hard.value}, {"fooling_error", fool.value}, {"bound", bound},
                      {"pass", ok}});
  }
  return {{"generator", g.descriptor()},
          {"targets", targets.size()},
          {"violations", violations},
          {"vacuous", vacuous},
          {"worst_ratio", worst_ratio},
          {"rows", rows},
          {"pass", violations == 0}};
}

Json op_extffm_bound(const Json& m, const MeasureContext& ctx) {
  const auto block = need<unsigned>(m, "block");
  const auto d = opt<unsigned>(m, "d", 2);
  require(d == 2, ErrorCode::ParameterOutOfRange, "extffm_bound enumerates the affine class, so d = 2");
  const auto width = opt<unsigned>(m, "field_width", block);
  const auto k = opt<unsigned>(m, "k", block);
  const double eps = opt<double>(m, "eps", std::pow(2.0, -0.5 * (static_cast<double>(k) - width)));
  const auto field = gf2::FieldSpec::standard(width);
  const unsigned n = d * block, total = n + 2 * block;
  std::vector<std::vector<unsigned>> parts(d + 1);
  for (unsigned i = 0; i < total; ++i) parts[std::min(i / block, d)].push_back(i);
  const Partition partition(parts);
  const auto res = check_extffm_bound(d, k, eps, field, block, partition, AdversaryClass::affine(total), ctx.policy);
  auto j = desc::bound_check_to_json(res);
  j["partition"] = desc::partition_to_json(partition);
  // The same harness must refuse a class that contains ExtFFM itself.
  bool rejected = false;
  try {
    check_extffm_bound(d, k, eps, field, block, partition,
                      AdversaryClass::list("extffm", {extffm_seeded_function(d, block, field)}), ctx.policy);
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::HypothesisViolation;
  }
  j["self_class_rejected"] = rejected;
  j["pass"] = res.pass && rejected;
  return j;
}

// Number of variables a restricted junta still depends on.
unsigned live_width(const Junta& t, const Restriction& rho) {
  const auto& sup = t.support();
  std::vector<unsigned> star;
  std::uint64_t fixed = 0;
  for (std::size_t j = 0; j < sup.size(); ++j) {
    if (rho[sup[j]] == Cell::Star)
      star.push_back(static_cast<unsigned>(j));
    else if (rho[sup[j]] == Cell::One)
      fixed |= std::uint64_t{1} << j;
  }
  unsigned width = 0;
  for (unsigned v : star) {
    bool depends = false;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << star.size()) && !depends; ++a) {
      std::uint64_t x = fixed;
      for (std::size_t i = 0; i < star.size(); ++i)
        if (bit_of(a, static_cast<unsigned>(i))) x |= std::uint64_t{1} << star[i];
      depends = t.table()[x] != t.table()[x ^ (std::uint64_t{1} << v)];
    }
    width += depends;
  }
  return width;
}

Json op_simplification(const Json& m, const MeasureContext& ctx) {
  Rng rng(seed_of(ctx, "simplification"));
  const auto n = need<unsigned>(m, "n"), d = need<unsigned>(m, "d");
  const auto delta = need<double>(m, "delta");
  const auto terms = opt<unsigned>(m, "terms", n);
  const auto trials = need<std::uint64_t>(m, "trials");
  PseudorestrictionConfig config;
  config.c_ell = opt<double>(m, "c_ell", config.c_ell);
  const PseudorestrictionSampler sampler(n, d, delta, config);
  const unsigned ell = sampler.ell();
  std::uint64_t hits = 0, stars = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto f = random_xor_of_juntas(n, d, terms, rng);
    const auto rho = sampler(random_bitvec(rng, sampler.seed_length()));
    stars += rho.alive_count();
    bool ok = true;
    for (const auto& term : f.terms()) ok = ok && live_width(term, rho) <= ell;
    hits += ok;
  }
  const double freq = static_cast<double>(hits) / static_cast<double>(trials);
  const double sigma = std::sqrt(delta * (1.0 - delta) / static_cast<double>(trials));
  const double threshold = 1.0 - delta - 3.0 * sigma;
  return {{"sampler", sampler.descriptor()},
          {"ell", ell},
          {"trials", trials},
          {"hits", hits},
          {"value", freq},
          {"star_fraction", static_cast<double>(stars) / static_cast<double>(trials * n)},
          {"threshold", threshold},
          {"trivial", d <= ell},
          {"pass", freq >= threshold}};
}

Json op_bp2_lifting(const Json& m, const MeasureContext& ctx) {
  Rng rng(seed_of(ctx, "bp2_lifting"));
  const auto n = need<unsigned>(m, "n"), d = need<unsigned>(m, "d"), t = need<unsigned>(m, "t");
  const auto eps = need<double>(m, "eps");
  const auto programs = opt<unsigned>(m, "programs", 1);
  require(n <= 14, ErrorCode::BudgetExceeded, "bp2_lifting is exhaustive; n <= 14");
  const auto g = bp2_prg(n, d, t, eps);
  Json rows = Json::array();
  bool all = true;
  double worst = 0.0;
  for (unsigned i = 0; i < programs; ++i) {
    const auto b = random_2bp(d, t, n, rng);
    const auto rep = bp2_lifting_check(g, b);
    all = all && rep.pass;
    if (rep.bound > 0) worst = std::max(worst, rep.gap / rep.bound);
    rows.push_back(desc::lifting_report_to_json(rep));
  }
  return {{"generator", g.descriptor()}, {"reports", rows}, {"worst_ratio", worst}, {"pass", all}};
}

using Op = Json (*)(const Json&, const MeasureContext&);

const std::map<std::string, Op>& ops() {
  static const std::map<std::string, Op> table = {
      {"corr_exact", op_corr_exact},
      {"corr_mc", op_corr_mc},
      {"corr_class_max", op_corr_class_max},
      {"kparty_norm", op_kparty_norm},
      {"fooling_error", op_fooling_error},
      {"tv", op_tv},
      {"design", op_design},
      {"field_oracle", op_field_oracle},
      {"rw_factorization", op_rw_factorization},
      {"parity_uncorrelation", op_parity_uncorrelation},
      {"corr_sandwich", op_corr_sandwich},
      {"l1_bound", op_l1_bound},
      {"bdvy", op_bdvy},
      {"lhl_certify", op_lhl_certify},
      {"extractor_tv", op_extractor_tv},
      {"nw_accounting", op_nw_accounting},
      {"extffm_bound", op_extffm_bound},
      {"simplification", op_simplification},
      {"bp2_lifting", op_bp2_lifting},
  };
  return table;
}

}  // namespace

bool needs_seed(const Json& m) {
  const auto op = m.value("op", "");
  if (op == "corr_mc" || op == "l1_bound" || op == "bdvy" || op == "simplification" || op == "bp2_lifting") return true;
  if (op == "kparty_norm") return m.value("samples", 0) > 0;
  return false;
}

Json run_measurement(const Json& m, const MeasureContext& ctx) {
  require(m.is_object(), ErrorCode::ParseError, "measurement must be an object");
  const auto op = need<std::string>(m, "op");
  const auto it = ops().find(op);
  require(it != ops().end(), ErrorCode::UnknownDescriptor, "unknown measurement op '" + op + "'");
  try {
    return it->second(m, ctx);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, op + ": " + e.what());
  }
}

}  // namespace plab::cli
