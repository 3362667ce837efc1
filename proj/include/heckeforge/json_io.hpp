#pragma once

#include <json.hpp>

#include "heckeforge/cyclo.hpp"
#include "heckeforge/group.hpp"
#include "heckeforge/hecke.hpp"
#include "heckeforge/hochschild.hpp"
#include "heckeforge/skew_group.hpp"

namespace heckeforge {

using Json = nlohmann::ordered_json;

// {"order": r, "terms": [{"exp": k, "num": "..", "den": ".."}]}
Json cyclo_to_json(const CycloNum& z);
CycloNum cyclo_from_json(const Json& j);

// {"r": .., "n": .., "exps": [..], "perm": [1-based images]}
Json element_to_json(const GroupElement& g);
GroupElement element_from_json(const Json& j);

Json forms_to_json(const SkewFormFamily& family);
// Validates shapes, skew-symmetry and group membership.
SkewFormFamily forms_from_json(const Json& j);

// {"terms": [{"mu": [..], "g": elem, "c": cyclo}]}
Json nc_to_json(const NCElement& x);

// Dims are listed densely for degrees 0..max_degree.
Json component_to_json(const ClassComponent& c, const std::string& source, int max_degree);
Json catalog_entry_to_json(const CatalogEntry& e, int codim, int max_degree);
Json param_report_to_json(const GHAParamReport& rep);

}  // namespace heckeforge
