#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "maxpoint/poset.hpp"

namespace maxpoint {

// {"elements": [labels...], "covers": [[lower, upper], ...]}
FinitePoset poset_from_json(const nlohmann::json& doc);
nlohmann::json poset_to_json(const FinitePoset& p);

FinitePoset parse_poset(const std::string& text);
FinitePoset load_poset(const std::string& path);

// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::string& path);
nlohmann::json parse_json_text(const std::string& text);

// One node per element in index order, one edge per cover pair.
void write_dot(std::ostream& out, const FinitePoset& p, const std::string& graph_name = "poset");

}  // namespace maxpoint
