#pragma once

#include <json.hpp>

#include "szmap/simplex_categories.hpp"
#include "szmap/simplicial_ops.hpp"
#include "szmap/szczarba.hpp"

namespace szmap {

// Stable machine-readable forms. Subsets serialize as integer arrays,
// hom elements as position arrays, operators as the two index arrays plus
// the domain dimension.
nlohmann::json to_json(const VertexList& v);
nlohmann::json to_json(const NormalOperator& op);
nlohmann::json to_json(const SubsetMorphism& U);
nlohmann::json to_json(const GHomElement& x);
nlohmann::json to_json(const SzResult& r);
nlohmann::json to_json(const VerifyReport& r);

VertexList vertex_list_from_json(const nlohmann::json& j);
NormalOperator operator_from_json(const nlohmann::json& j);
SubsetMorphism subset_from_json(const nlohmann::json& j, int n);
GHomElement ghom_from_json(const nlohmann::json& j);
SzResult sz_result_from_json(const nlohmann::json& j);
VerifyReport verify_report_from_json(const nlohmann::json& j);

}  // namespace szmap
