#pragma once

#include <json.hpp>

#include "priordan/balanced.hpp"
#include "priordan/graph.hpp"
#include "priordan/series.hpp"

namespace priordan {

using json = nlohmann::ordered_json;

// {"n":..., "p":..., "g":"<poly>", "f":"<poly>"}
json pair_to_json(const CanonicalPair& pair);
CanonicalPair pair_from_json(const json& j);

// {"n":..., "p":..., "matrix":[[...],...]}
json matrix_to_json(const AdjMatrix& m);

// {"dim":k, "steps":[...]}
json walk_to_json(const CubeWalk& w);
CubeWalk walk_from_json(const json& j);

} // namespace priordan
