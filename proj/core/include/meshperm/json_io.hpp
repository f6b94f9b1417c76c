#pragma once

#include "meshperm/distribution_table.hpp"
#include "meshperm/multiperm.hpp"
#include "meshperm/occurrence.hpp"
#include "meshperm/pattern.hpp"

#include <nlohmann/json.hpp>

namespace meshperm {

using Json = nlohmann::ordered_json;

/// {"d":3,"n":5,"rows":[[...],[...]]}, rows 2..d.
Json to_json(const MultiPerm& perm);
MultiPerm multiperm_from_json(const Json& j);

/// {"d":2,"columns":["+-","-+"]}.
Json to_json(const Smp& pattern);
Smp smp_from_json(const Json& j);

/// {"T":<multiperm>,"shading":[[c1,...,cd],...]}.
Json to_json(const MeshPattern& pattern);
MeshPattern mesh_from_json(const Json& j);

/// {"d":..,"n":..,"pattern":"..","counts":["..",..]} with decimal strings.
Json to_json(const DistributionTable& table);
DistributionTable table_from_json(const Json& j);

} // namespace meshperm
