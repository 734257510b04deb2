#pragma once

#include <json.hpp>

#include "fq/polytope.hpp"
#include "fq/verify.hpp"

namespace fq {

using Json = nlohmann::json;

// Schemas:
//   group     {"factors":[{"kind":"U","n":2},{"kind":"torus","rank":1},...]}
//   weight    [1,0]
//   character {"group":..., "coeffs":[{"weight":[0,-2],"mult":1},...]}
//   series    character + {"trusted_radius": float, "trusted_radius_sq": "p/q"}
//   embedding {"supergroup":..., "subgroup":..., "matrix":[[1,1]],
//              "restricted_margin_sq": "1"}          (margin optional)
//   model     {"group":..., "weights":[[1,0],[0,1]],
//              "certified_margin_sq": "1"}           (margin optional)
//   polytope  {"group":..., "vertices":[[-2],[2]]}

Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json character_to_json(const CharacterElement& c, const RootSystem& rs);
CharacterElement character_from_json(const Json& j, const RootSystem& rs);

Json series_to_json(const FormalSeries& s, const RootSystem& rs);
FormalSeries series_from_json(const Json& j, const RootSystem& rs);

Json embedding_to_json(const SubgroupEmbedding& e);
// Returns the embedding plus the optional restricted-margin certificate.
std::pair<SubgroupEmbedding, std::optional<Rational>> embedding_from_json(const Json& j);

Json model_to_json(const HermitianModel& m);
HermitianModel model_from_json(const Json& j);

Json polytope_to_json(const AdaptedPolytope& p);
AdaptedPolytope polytope_from_json(const Json& j);

Json report_to_json(const Report& r);

Json multiset_to_json(const WeightMultiset& ws);

Rational rational_from_json(const Json& j);

} // namespace fq
