#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "tropgw/configs.hpp"
#include "tropgw/formal.hpp"

namespace tropgw {

using Json = nlohmann::json;

Json vector_to_json(LatticeVector v);
LatticeVector vector_from_json(const Json& j);

// {"components": [[[a,b],...],...], "incoming": null | {"component": k, "vector": [a,b]}}
Json config_to_json(const CurveConfig& c);
CurveConfig config_from_json(const Json& j, bool require_canonical = false);

// Compact dump of the canonical JSON form: the persistence key.
std::string canonical_key(const CurveConfig& c);

// [{"config": ..., "value": "p/q"}, ...] in canonical key order.
Json formal_sum_to_json(const FormalSum& sum);
FormalSum formal_sum_from_json(const Json& j);

}  // namespace tropgw
