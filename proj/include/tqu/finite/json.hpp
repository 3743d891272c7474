#pragma once

#include <json.hpp>

#include "tqu/finite/subset.hpp"
#include "tqu/finite/topology.hpp"

namespace tqu::finite {

/// Subsets serialize as sorted integer lists: [0,2,3].
nlohmann::json to_json(Subset s);
/// Throws InputError on non-integer entries or elements >= n.
Subset subset_from_json(const nlohmann::json& j, unsigned n);

/// {"n":4,"opens":[[],[0],...]}
nlohmann::json to_json(const FiniteTopology& t);
FiniteTopology topology_from_json(const nlohmann::json& j);

}  // namespace tqu::finite
