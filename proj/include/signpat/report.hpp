#pragma once

// Machine-readable reports: JSON for search, lift and theorem results, CSV
// for census rows. Rationals are written as "p/q" strings.

#include <ostream>
#include <vector>

#include <json.hpp>

#include "signpat/adjacency.hpp"
#include "signpat/census.hpp"
#include "signpat/realize.hpp"

namespace signpat {

nlohmann::json to_json(const RootSet& roots);
nlohmann::json to_json(const ConfigHit& hit);
nlohmann::json to_json(const SearchReport& report);
nlohmann::json to_json(const STReport& report);
nlohmann::json to_json(const TheoremReport& report);

/// Reads back the "witness" array written by to_json(RootSet).
RootSet root_set_from_json(const nlohmann::json& j);

inline constexpr const char* kCensusCsvHeader = "d,total,canonical,noncanonical,A,B,C,D";

void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows);

}  // namespace signpat
