#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "maxpoint/counterexample.hpp"

namespace maxpoint {

// {"thresholds": {"default": n|null, "exceptions": {"i": n|null}},
//  "allPhiLevel1": bool, "extraPhi": [{"conds": {"i": n}, "levels": [0, 1]}]}
SymbolicOpen symbolic_open_from_json(const nlohmann::json& doc);
nlohmann::json symbolic_open_to_json(const SymbolicOpen& u);

// A family file is an array of opens.
std::vector<SymbolicOpen> family_from_json(const nlohmann::json& doc);
nlohmann::json family_to_json(const std::vector<SymbolicOpen>& family);
std::vector<SymbolicOpen> load_family(const std::string& path);

}  // namespace maxpoint
