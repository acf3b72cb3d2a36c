#pragma once

#include <string_view>

#include <json.hpp>

#include "plab/boolean_function.hpp"
#include "plab/corrlab.hpp"
#include "plab/extractors.hpp"
#include "plab/gf2.hpp"
#include "plab/hardfn.hpp"
#include "plab/models.hpp"
#include "plab/prg.hpp"

// JSON descriptors for every object an experiment can name. Malformed input
// raises ParseError; an unrecognized family or kind raises UnknownDescriptor.
namespace plab::desc {

using Json = nlohmann::ordered_json;

/// Parse text, mapping syntax errors to ParseError.
Json parse(std::string_view text);

Json field_to_json(const gf2::FieldSpec& spec);
/// {"width": w} picks the default modulus; {"width", "modulus": hex} pins one.
gf2::FieldSpec field_from_json(const Json& j);

Json poly_to_json(const SparsePolyF2& p);
SparsePolyF2 poly_from_json(const Json& j);

Json junta_to_json(const Junta& j);
Junta junta_from_json(const Json& j);

Json xor_of_juntas_to_json(const XorOfJuntas& x);
XorOfJuntas xor_of_juntas_from_json(const Json& j);

Json bp2_to_json(const BranchingProgram2& b);
/// Explicit layers, or {"random": true, d, ell, n, seed}.
BranchingProgram2 bp2_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json design_to_json(const Design& d);
Design design_from_json(const Json& j);

/// {"family": ...} for hard functions, models and small helpers.
BooleanFunction function_from_json(const Json& j);

/// {"kind": identity | parity | toeplitz, ...}.
BlockMap block_map_from_json(const Json& j);

/// Same keys as AdversaryClass::config(), plus "budget" where relevant.
AdversaryClass class_from_json(const Json& j);

/// Accepts every descriptor a Generator reports, plus the recipes
/// junta_prg / bp2_prg / nw_custom used in manifests. Rebuilt "nw"
/// descriptors must match the reconstruction exactly.
Generator generator_from_json(const Json& j);

PseudorestrictionSampler sampler_from_json(const Json& j);

Json corr_report_to_json(const CorrReport& r);
Json bound_check_to_json(const BoundCheck& b);
Json lifting_report_to_json(const LiftingReport& r);

/// "uniform:n", "point:v" (bits taken from `default_bits`) or "point:n:v".
Distribution distribution_from_string(std::string_view text, unsigned default_bits);
/// {"uniform": n} | {"point": v, "bits": n} | {"bits": n, "counts": [...]}.
Distribution distribution_from_json(const Json& j);

}  // namespace plab::desc
