#pragma once

#include <json.hpp>

#include "adnil/dyck.hpp"
#include "adnil/insertion.hpp"
#include "adnil/partition.hpp"
#include "adnil/root_poset.hpp"

namespace adnil {

// {"n": half-length, "word": lowercase word}
nlohmann::json to_json(const DyckPath& path);
DyckPath dyck_from_json(const nlohmann::json& value);

// {"l": rank, "parts": [..]}
nlohmann::json to_json(const LPartition& lambda);
LPartition partition_from_json(const nlohmann::json& value);

// {"l": rank, "antichain": [[start, end], ..]} — ideals travel as their
// minimal roots.
nlohmann::json to_json(const RootIdeal& ideal);
RootIdeal ideal_from_json(const nlohmann::json& value);

// {"l": rank, "k": contact count, "i": contacts, "a": rows 1..k+1, "h": heights}
nlohmann::json to_json(const InsertionTable& table);

}  // namespace adnil
