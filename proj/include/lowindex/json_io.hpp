#pragma once

#include <json.hpp>

#include "lowindex/coset_enumeration.hpp"
#include "lowindex/enumeration.hpp"
#include "lowindex/hyperbolic.hpp"
#include "lowindex/orbifold.hpp"
#include "lowindex/verification.hpp"

namespace lowindex {

using Json = nlohmann::ordered_json;

Json census_json(const CensusEntry& entry);
Json subgroup_json(const SubgroupRecord& record);
Json signature_json(const Signature& sig);
Json enumeration_json(const EnumerationResult& result);
Json isometry_json(const IsometryClass& cls);
Json report_json(const Report& report);

}  // namespace lowindex
