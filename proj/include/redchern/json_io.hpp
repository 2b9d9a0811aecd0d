#pragma once

#include <json.hpp>

#include "redchern/mpoly.hpp"
#include "redchern/oracle.hpp"
#include "redchern/symfun.hpp"
#include "redchern/universal.hpp"

namespace redchern {

using Json = nlohmann::ordered_json;

// MPoly: {"vars": [{"name", "degree"}...], "terms": [{"coeff": "p/q", "exps": [...]}...]}
// with terms in canonical order.
Json to_json(const MPoly& p);
MPoly mpoly_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"basis": "m"|"e", "coeffs": [{"partition": [...], "coeff": "p/q"}...]},
// weight descending, then compare_order descending.
Json to_json(const SymPolyInBasis& s);
SymPolyInBasis sympoly_from_json(const Json& j, int n);

// {"n", "N", "psi": [...], "phi": [...], "lead": [...]}
Json to_json(const UniversalPolys& u);
UniversalPolys universal_from_json(const Json& j);

// {"identity", "ring", "rank", "seed", "status", "witness"}
Json to_json(const CheckReport& r);

}  // namespace redchern
