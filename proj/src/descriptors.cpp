#include "plab/descriptors.hpp"

#include <charconv>
#include <memory>
#include <string>

#include "plab/error.hpp"
#include "plab/random.hpp"

namespace plab::desc {
namespace {

template <typename T>
T need(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorCode::ParseError, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad value for '") + key + "': " + e.what());
  }
}

template <typename T>
T opt(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return need<T>(j, key);
}

const Json& sub(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorCode::ParseError, std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string tag(const Json& j, const char* key) {
  require(j.is_object(), ErrorCode::ParseError, "descriptor must be an object");
  return need<std::string>(j, key);
}

BitVec bits_of(const Json& j, const char* key) { return BitVec::from_string(need<std::string>(j, key)); }

std::uint64_t mask_of(const std::vector<unsigned>& vars) {
  std::uint64_t m = 0;
  for (unsigned v : vars) {
    require(v < kWordBits, ErrorCode::ParseError, "variable index above 63");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

std::vector<unsigned> vars_of(std::uint64_t m, unsigned n) {
  std::vector<unsigned> v;
  for (unsigned i = 0; i < n; ++i)
    if (bit_of(m, i)) v.push_back(i);
  return v;
}

TruthTable table_from_string(const std::string& s, unsigned arity) {
  require(arity <= kMaterializeMaxArity, ErrorCode::ArityTooLarge, "table arity above 24");
  require(s.size() == (std::size_t{1} << arity), ErrorCode::ParseError,
          "table needs " + std::to_string(std::size_t{1} << arity) + " entries, got " + std::to_string(s.size()));
  TruthTable t(arity);
  for (std::size_t x = 0; x < s.size(); ++x) {
    require(s[x] == '0' || s[x] == '1', ErrorCode::ParseError, "table entries must be 0 or 1");
    t.set(x, s[x] == '1');
  }
  return t;
}

std::string table_to_string(const TruthTable& t) {
  std::string s(t.size(), '0');
  for (std::uint64_t x = 0; x < t.size(); ++x)
    if (t[x]) s[x] = '1';
  return s;
}

JuntaPrgConstants constants_of(const Json& j) {
  JuntaPrgConstants c;
  c.C = opt<double>(j, "C", c.C);
  c.c = opt<double>(j, "c", c.c);
  return c;
}

Generator nw_custom(const Json& j) {
  const auto h = function_from_json(sub(j, "h")).materialize();
  const auto design = design_from_json(sub(j, "design"));
  require(h.arity() == design.set_size, ErrorCode::ShapeMismatch, "hard function arity differs from set size");
  const auto n = static_cast<unsigned>(design.sets.size());
  Json d = {{"kind", "nw_custom"}, {"n", n}, {"seed_len", design.universe}, {"design", design_to_json(design)},
            {"h", sub(j, "h")}};
  std::vector<std::vector<unsigned>> members;
  for (std::size_t i = 0; i < n; ++i) members.push_back(design.members(i));
  auto word = [h, members](std::uint64_t seed) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      out |= static_cast<std::uint64_t>(h(gather_bits(seed, members[i]))) << i;
    return out;
  };
  return {design.universe, n, std::move(d), [h, design](const BitVec& s) { return nw_generate(h, design, s); },
          word};
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

Json field_to_json(const gf2::FieldSpec& spec) {
  return {{"width", spec.width()}, {"modulus", spec.modulus().to_hex()}};
}

gf2::FieldSpec field_from_json(const Json& j) {
  const auto w = need<unsigned>(j, "width");
  if (!j.contains("modulus")) return gf2::FieldSpec::standard(w);
  return gf2::FieldSpec::create(w, BitVec::from_hex(need<std::string>(j, "modulus"), w + 1));
}

Json poly_to_json(const SparsePolyF2& p) {
  Json mons = Json::array();
  for (auto m : p.monomials()) mons.push_back(vars_of(m, p.arity()));
  return {{"family", "poly"}, {"n", p.arity()}, {"monomials", mons}, {"constant", p.constant() ? 1 : 0}};
}

SparsePolyF2 poly_from_json(const Json& j) {
  std::vector<std::uint64_t> mons;
  for (const auto& m : sub(j, "monomials")) {
    try {
      mons.push_back(mask_of(m.get<std::vector<unsigned>>()));
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::ParseError, std::string("bad monomial: ") + e.what());
    }
  }
  return {need<unsigned>(j, "n"), std::move(mons), opt<int>(j, "constant", 0) != 0};
}

Json junta_to_json(const Junta& j) {
  return {{"family", "junta"}, {"n", j.arity()}, {"support", j.support()}, {"table", table_to_string(j.table())}};
}

Junta junta_from_json(const Json& j) {
  const auto support = need<std::vector<unsigned>>(j, "support");
  return {need<unsigned>(j, "n"), support,
          table_from_string(need<std::string>(j, "table"), static_cast<unsigned>(support.size()))};
}

Json xor_of_juntas_to_json(const XorOfJuntas& x) {
  Json terms = Json::array();
  for (const auto& t : x.terms()) terms.push_back(junta_to_json(t));
  return {{"family", "xor_of_juntas"}, {"n", x.arity()}, {"terms", terms}};
}

XorOfJuntas xor_of_juntas_from_json(const Json& j) {
  const auto n = need<unsigned>(j, "n");
  if (opt<bool>(j, "random", false)) {
    Rng rng(need<std::uint64_t>(j, "seed"));
    return random_xor_of_juntas(n, need<unsigned>(j, "width"), need<unsigned>(j, "count"), rng);
  }
  std::vector<Junta> terms;
  for (const auto& t : sub(j, "terms")) terms.push_back(junta_from_json(t));
  return XorOfJuntas(n, std::move(terms));
}

Json bp2_to_json(const BranchingProgram2& b) {
  Json layers = Json::array();
  for (const auto& layer : b.layers) {
    Json nodes = Json::array();
    for (const auto& node : layer) {
      std::string t(node.table.size(), '0');
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<char>('0' + node.table[i]);
      nodes.push_back({{"reads", node.reads}, {"table", t}});
    }
    layers.push_back(nodes);
  }
  return {{"family", "bp2"}, {"n", b.arity}, {"start", b.start}, {"accept", b.accept}, {"layers", layers}};
}

BranchingProgram2 bp2_from_json(const Json& j) {
  if (opt<bool>(j, "random", false)) {
    Rng rng(need<std::uint64_t>(j, "seed"));
    return random_2bp(need<unsigned>(j, "d"), need<unsigned>(j, "ell"), need<unsigned>(j, "n"), rng);
  }
  BranchingProgram2 b;
  b.arity = need<unsigned>(j, "n");
  b.start = static_cast<std::uint8_t>(opt<unsigned>(j, "start", 0));
  b.accept = static_cast<std::uint8_t>(opt<unsigned>(j, "accept", 1));
  for (const auto& layer : sub(j, "layers")) {
    require(layer.is_array() && layer.size() == 2, ErrorCode::ParseError, "each layer lists exactly two nodes");
    BranchingProgram2::Layer out;
    for (std::size_t v = 0; v < 2; ++v) {
      out[v].reads = need<std::vector<unsigned>>(layer[v], "reads");
      for (char c : need<std::string>(layer[v], "table")) {
        require(c == '0' || c == '1', ErrorCode::ParseError, "transition entries must be 0 or 1");
        out[v].table.push_back(static_cast<std::uint8_t>(c - '0'));
      }
    }
    b.layers.push_back(std::move(out));
  }
  b.validate();
  return b;
}

Json partition_to_json(const Partition& p) { return p.blocks(); }

Partition partition_from_json(const Json& j) {
  try {
    return Partition(j.get<std::vector<std::vector<unsigned>>>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad partition: ") + e.what());
  }
}

Json design_to_json(const Design& d) {
  Json sets = Json::array();
  for (std::size_t i = 0; i < d.sets.size(); ++i) sets.push_back(d.members(i));
  return {{"universe", d.universe},
          {"set_size", d.set_size},
          {"max_intersection", d.max_intersection},
          {"sets", sets}};
}

Design design_from_json(const Json& j) {
  Design d;
  d.universe = need<unsigned>(j, "universe");
  d.set_size = need<unsigned>(j, "set_size");
  d.max_intersection = need<unsigned>(j, "max_intersection");
  for (const auto& s : sub(j, "sets")) d.sets.push_back(mask_of(s.get<std::vector<unsigned>>()));
  d.check();
  return d;
}

BlockMap block_map_from_json(const Json& j) {
  const auto kind = tag(j, "kind");
  if (kind == "identity") return BlockMap::identity(need<unsigned>(j, "bits"));
  if (kind == "parity") return BlockMap::parity(need<unsigned>(j, "m"), need<unsigned>(j, "r"));
  if (kind == "toeplitz")
    return BlockMap::toeplitz(ToeplitzExtractor(need<unsigned>(j, "n"), need<unsigned>(j, "m"), bits_of(j, "seed")));
  fail(ErrorCode::UnknownDescriptor, "unknown block map '" + kind + "'");
}

BooleanFunction function_from_json(const Json& j) {
  const auto family = tag(j, "family");
  if (family == "gip") return gip_function(need<unsigned>(j, "m"), need<unsigned>(j, "k"));
  if (family == "rw") return rw_function(need<unsigned>(j, "m"), need<unsigned>(j, "k"), need<unsigned>(j, "r"));
  if (family == "ffm") return ffm_function(need<unsigned>(j, "d"), field_from_json(sub(j, "field")));
  if (family == "extffm")
    return extffm_function(need<unsigned>(j, "d"), need<unsigned>(j, "block"), bits_of(j, "seed"),
                           field_from_json(sub(j, "field")));
  if (family == "extffm_seeded")
    return extffm_seeded_function(need<unsigned>(j, "d"), need<unsigned>(j, "block"), field_from_json(sub(j, "field")));
  if (family == "parity") {
    const auto n = need<unsigned>(j, "n");
    if (j.contains("support")) return BooleanFunction::parity_of(n, mask_of(need<std::vector<unsigned>>(j, "support")));
    return BooleanFunction::parity(n);
  }
  if (family == "and") return BooleanFunction::conjunction(need<unsigned>(j, "n"));
  if (family == "majority") {
    const auto n = need<unsigned>(j, "n");
    return BooleanFunction(n, [n](std::uint64_t x) { return 2U * static_cast<unsigned>(std::popcount(x)) > n; });
  }
  if (family == "dictator") return BooleanFunction::dictator(need<unsigned>(j, "n"), need<unsigned>(j, "index"));
  if (family == "constant") return BooleanFunction::constant(need<unsigned>(j, "n"), opt<int>(j, "value", 0) != 0);
  if (family == "table") {
    const auto n = need<unsigned>(j, "n");
    return BooleanFunction::from_table(table_from_string(need<std::string>(j, "table"), n));
  }
  if (family == "random") {
    const auto n = need<unsigned>(j, "n");
    require(n <= kMaterializeMaxArity, ErrorCode::ArityTooLarge, "random tables limited to 24 inputs");
    Rng rng(need<std::uint64_t>(j, "seed"));
    TruthTable t(n);
    for (std::uint64_t x = 0; x < t.size(); ++x) t.set(x, (rng() & 1U) != 0);
    return BooleanFunction::from_table(std::move(t));
  }
  if (family == "poly") return poly_from_json(j).function();
  if (family == "junta") return junta_from_json(j).function();
  if (family == "xor_of_juntas") return xor_of_juntas_from_json(j).function();
  if (family == "bp2") return bp2_from_json(j).function();
  if (family == "compose")
    return compose_ext(function_from_json(sub(j, "outer")), block_map_from_json(sub(j, "ext")), need<unsigned>(j, "k"));
  if (family == "not") return function_from_json(sub(j, "f")).negated();
  if (family == "xor") return xor_of(function_from_json(sub(j, "f")), function_from_json(sub(j, "g")));
  fail(ErrorCode::UnknownDescriptor, "unknown function family '" + family + "'");
}

AdversaryClass class_from_json(const Json& j) {
  const auto kind = tag(j, "class");
  if (kind == "juntas") return AdversaryClass::juntas(need<unsigned>(j, "n"), need<unsigned>(j, "width"));
  if (kind == "affine") return AdversaryClass::affine(need<unsigned>(j, "n"));
  if (kind == "set_multilinear")
    return AdversaryClass::set_multilinear(need<unsigned>(j, "n"), partition_from_json(sub(j, "partition")),
                                           need<unsigned>(j, "max_degree_exclusive"),
                                           opt<std::uint64_t>(j, "budget", std::uint64_t{1} << 24));
  if (kind == "nof_one_bit") return AdversaryClass::nof_one_bit(need<unsigned>(j, "block_bits"));
  if (kind == "junta_composition")
    return AdversaryClass::junta_composition(function_from_json(sub(j, "outer")), need<unsigned>(j, "r"),
                                             need<unsigned>(j, "k"),
                                             opt<std::uint64_t>(j, "budget", std::uint64_t{1} << 24));
  if (kind == "sparse_sampled")
    return AdversaryClass::sparse_sampled(need<unsigned>(j, "n"), need<unsigned>(j, "degree"),
                                          need<unsigned>(j, "terms"), need<std::uint64_t>(j, "samples"),
                                          need<std::uint64_t>(j, "seed"));
  if (kind == "list") {
    std::vector<BooleanFunction> members;
    for (const auto& m : sub(j, "members")) members.push_back(function_from_json(m));
    return AdversaryClass::list(opt<std::string>(j, "name", "list"), std::move(members));
  }
  fail(ErrorCode::UnknownDescriptor, "unknown adversary class '" + kind + "'");
}

PseudorestrictionSampler sampler_from_json(const Json& j) {
  const auto kind = tag(j, "kind");
  if (kind == "all_star") return PseudorestrictionSampler::all_star(need<unsigned>(j, "n"));
  if (kind == "pseudorestriction") {
    PseudorestrictionConfig config;
    config.c_ell = opt<double>(j, "c_ell", config.c_ell);
    return {need<unsigned>(j, "n"), need<unsigned>(j, "d"), need<double>(j, "delta"), config};
  }
  fail(ErrorCode::UnknownDescriptor, "unknown restriction sampler '" + kind + "'");
}

Generator generator_from_json(const Json& j) {
  const auto kind = tag(j, "kind");
  if (kind == "identity") return Generator::identity(need<unsigned>(j, "n"));
  if (kind == "constant") {
    const auto n = need<unsigned>(j, "n");
    require(n <= kWordBits, ErrorCode::ParameterOutOfRange, "constant generators limited to 64 bits");
    return Generator::constant(n, BitVec::from_hex(need<std::string>(j, "value"), n).word(),
                               opt<unsigned>(j, "seed_len", 0));
  }
  if (kind == "junta_prg")
    return junta_prg(need<unsigned>(j, "n"), need<unsigned>(j, "d"), need<double>(j, "eps"),
                     opt<std::string>(j, "hard", "auto"), constants_of(j));
  if (kind == "bp2_prg")
    return bp2_prg(need<unsigned>(j, "n"), need<unsigned>(j, "d"), need<unsigned>(j, "t"), need<double>(j, "eps"),
                   opt<std::string>(j, "hard", "auto"), constants_of(j));
  if (kind == "nw") {
    const auto& c = sub(j, "constants");
    const auto& hard = sub(j, "hard_fn");
    const auto family = need<std::string>(hard, "family");
    const auto n = need<unsigned>(j, "n"), d = need<unsigned>(c, "d");
    auto g = j.contains("bp2") ? bp2_prg(n, d, need<unsigned>(sub(j, "bp2"), "t"), need<double>(sub(j, "bp2"), "eps"),
                                         family, constants_of(c))
                               : junta_prg(n, d, need<double>(c, "eps"), family, constants_of(c));
    require(g.descriptor() == j, ErrorCode::ParseError, "descriptor does not match its reconstruction");
    return g;
  }
  if (kind == "nw_custom") return nw_custom(j);
  if (kind == "aw")
    return aw_prg(generator_from_json(sub(j, "base")), sampler_from_json(sub(j, "sampler")),
                  need<unsigned>(j, "rounds"));
  fail(ErrorCode::UnknownDescriptor, "unknown generator kind '" + kind + "'");
}

Json corr_report_to_json(const CorrReport& r) {
  Json j = {{"value", r.value},
            {"mode", r.mode == Mode::Exact ? "exact" : "monte-carlo"},
            {"samples", r.samples},
            {"radius", r.radius}};
  if (r.mode == Mode::Exact) {
    j["numerator"] = r.numerator;
    j["denominator"] = r.denominator;
  }
  if (r.argmax) {
    j["argmax"] = *r.argmax;
    j["argmax_descriptor"] = r.argmax_descriptor;
  }
  return j;
}

Json bound_check_to_json(const BoundCheck& b) {
  return {{"measured", b.measured}, {"bound", b.bound},   {"slack", b.slack},
          {"pass", b.pass},         {"vacuous", b.vacuous}, {"report", corr_report_to_json(b.report)},
          {"config", b.config}};
}

Json lifting_report_to_json(const LiftingReport& r) {
  return {{"gap", r.gap},   {"l1_core", r.l1_core}, {"junta_error", r.junta_error}, {"junta_argmax", r.junta_argmax},
          {"bound", r.bound}, {"pass", r.pass}};
}

Distribution distribution_from_string(std::string_view text, unsigned default_bits) {
  std::vector<std::uint64_t> nums;
  const auto colon = text.find(':');
  require(colon != std::string_view::npos, ErrorCode::ParseError, "distribution must look like kind:args");
  const auto kind = text.substr(0, colon);
  auto rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto next = rest.find(':');
    const auto part = rest.substr(0, next);
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    require(ec == std::errc() && p == part.data() + part.size(), ErrorCode::ParseError,
            "bad number in distribution '" + std::string(text) + "'");
    nums.push_back(v);
    rest = next == std::string_view::npos ? std::string_view{} : rest.substr(next + 1);
  }
  if (kind == "uniform" && nums.size() == 1) return Distribution::uniform(static_cast<unsigned>(nums[0]));
  if (kind == "point" && nums.size() == 1) return Distribution::point(default_bits, nums[0]);
  if (kind == "point" && nums.size() == 2) return Distribution::point(static_cast<unsigned>(nums[0]), nums[1]);
  fail(ErrorCode::ParseError, "unknown distribution '" + std::string(text) + "'");
}

Distribution distribution_from_json(const Json& j) {
  if (j.is_string()) return distribution_from_string(j.get<std::string>(), 0);
  if (j.contains("uniform")) return Distribution::uniform(need<unsigned>(j, "uniform"));
  if (j.contains("point")) return Distribution::point(need<unsigned>(j, "bits"), need<std::uint64_t>(j, "point"));
  Distribution d;
  d.bits = need<unsigned>(j, "bits");
  d.counts = need<std::vector<std::uint64_t>>(j, "counts");
  require(d.counts.size() == (std::size_t{1} << d.bits), ErrorCode::SupportMismatch, "counts do not cover 2^bits");
  return d;
}

}  // namespace plab::desc
