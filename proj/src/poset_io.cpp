#include "maxpoint/poset_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace maxpoint {

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

FinitePoset poset_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array()) {
    throw Error(ErrorCode::ParseError, "poset needs an \"elements\" array");
  }
  std::vector<std::string> labels;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw Error(ErrorCode::ParseError, "element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<LabelPair> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) throw Error(ErrorCode::ParseError, "\"covers\" must be an array");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
        throw Error(ErrorCode::ParseError, "each cover must be a pair of labels");
      }
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return FinitePoset::build(std::move(labels), covers);
}

nlohmann::json poset_to_json(const FinitePoset& p) {
  nlohmann::json doc;
  doc["elements"] = p.labels();
  auto covers = nlohmann::json::array();
  for (auto [lo, hi] : p.cover_pairs()) covers.push_back({p.label(lo), p.label(hi)});
  doc["covers"] = std::move(covers);
  return doc;
}

FinitePoset parse_poset(const std::string& text) { return poset_from_json(parse_json_text(text)); }

FinitePoset load_poset(const std::string& path) { return parse_poset(read_text_file(path)); }

void write_dot(std::ostream& out, const FinitePoset& p, const std::string& graph_name) {
  out << "digraph " << dot_quote(graph_name) << " {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << "  n" << i << " [label=" << dot_quote(p.label(i)) << "];\n";
  for (auto [lo, hi] : p.cover_pairs()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
}

}  // namespace maxpoint
