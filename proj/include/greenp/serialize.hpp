#pragma once

// JSON forms of the public values.

#include <cstdint>

#include "json.hpp"

#include "greenp/ar_quiver.hpp"
#include "greenp/invariants.hpp"
#include "greenp/stable_ring.hpp"
#include "greenp/upsilon.hpp"

namespace greenp {

// {"p": p, "terms": [{"shift": i, "j": j, "mult": m}, ...]}, terms sorted by
// (shift, j).
nlohmann::json to_json(const StableElement& e);
// Inverse of to_json; shifts are canonicalized.
StableElement stable_element_from_json(const nlohmann::json& j);

// {"sine_index": k, "p": p, "value": v}
nlohmann::json to_json(const GammaValue& g);

nlohmann::json to_json(const PrimeContext& ctx, const StableClass& c, const LoewyPair& lp);

// A number when it fits in 64 bits, a decimal string otherwise.
nlohmann::json bigint_json(const BigInt& n);

// {"p", "field", "radical_dim", "semisimple", "summand_dims",
//  "trace_discriminant"}; summand_dims is null when undecided.
nlohmann::json upsilon_report(const UpsilonAlgebra& alg, const FieldSpec& field,
                              bool with_radical_basis, std::uint64_t seed);

nlohmann::json census_json(const PrimeContext& ctx);

nlohmann::json to_json(const ArQuiver& q);

}  // namespace greenp
