#include "maxpoint/symbolic_io.hpp"

#include <charconv>

#include "maxpoint/poset_io.hpp"

namespace maxpoint {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

Nat natural(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    fail(what + " must be a natural number");
  }
  return v.get<Nat>();
}

std::optional<Nat> natural_or_absent(const nlohmann::json& v, const std::string& what) {
  if (v.is_null()) return std::nullopt;
  return natural(v, what);
}

Nat index_key(const std::string& key) {
  Nat out = 0;
  const auto* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, out);
  if (key.empty() || ec != std::errc{} || ptr != end) fail("index key \"" + key + "\" is not a natural number");
  return out;
}

const nlohmann::json& member(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key)) fail(std::string("missing \"") + key + "\"");
  return obj.at(key);
}

nlohmann::json json_of(const std::optional<Nat>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

}  // namespace

SymbolicOpen symbolic_open_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) fail("symbolic open must be an object");
  SymbolicOpen u;

  const auto& t = member(doc, "thresholds");
  if (!t.is_object()) fail("\"thresholds\" must be an object");
  const auto def = natural_or_absent(member(t, "default"), "threshold default");
  std::map<Nat, std::optional<Nat>> exceptions;
  if (t.contains("exceptions")) {
    if (!t["exceptions"].is_object()) fail("\"exceptions\" must be an object");
    for (const auto& [k, v] : t["exceptions"].items()) {
      exceptions[index_key(k)] = natural_or_absent(v, "threshold at " + k);
    }
  }
  u.thresholds = ThresholdRule(def, std::move(exceptions));

  if (doc.contains("allPhiLevel1")) {
    if (!doc["allPhiLevel1"].is_boolean()) fail("\"allPhiLevel1\" must be a boolean");
    u.all_phi_level1 = doc["allPhiLevel1"].get<bool>();
  }

  if (doc.contains("extraPhi")) {
    if (!doc["extraPhi"].is_array()) fail("\"extraPhi\" must be an array");
    for (const auto& c : doc["extraPhi"]) {
      if (!c.is_object()) fail("cylinder must be an object");
      PhiCylinder cyl;
      const auto& conds = member(c, "conds");
      if (!conds.is_object()) fail("\"conds\" must be an object");
      for (const auto& [k, v] : conds.items()) cyl.conds[index_key(k)] = natural(v, "condition at " + k);
      const auto& levels = member(c, "levels");
      if (!levels.is_array()) fail("\"levels\" must be an array");
      for (const auto& l : levels) {
        const Nat level = natural(l, "level");
        if (level > 1) fail("levels must be 0 or 1");
        cyl.levels[level] = true;
      }
      u.extra_phi.push_back(std::move(cyl));
    }
  }
  return u;
}

nlohmann::json symbolic_open_to_json(const SymbolicOpen& u) {
  auto exceptions = nlohmann::json::object();
  for (const auto& [i, v] : u.thresholds.exceptions()) exceptions[std::to_string(i)] = json_of(v);
  auto extra = nlohmann::json::array();
  for (const auto& c : u.extra_phi) {
    auto conds = nlohmann::json::object();
    for (auto [i, v] : c.conds) conds[std::to_string(i)] = v;
    auto levels = nlohmann::json::array();
    for (int l = 0; l < 2; ++l) {
      if (c.levels[static_cast<std::size_t>(l)]) levels.push_back(l);
    }
    extra.push_back({{"conds", conds}, {"levels", levels}});
  }
  return {{"thresholds", {{"default", json_of(u.thresholds.default_value())}, {"exceptions", exceptions}}},
          {"allPhiLevel1", u.all_phi_level1},
          {"extraPhi", extra}};
}

std::vector<SymbolicOpen> family_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) fail("family must be an array of symbolic opens");
  std::vector<SymbolicOpen> out;
  for (std::size_t j = 0; j < doc.size(); ++j) {
    try {
      out.push_back(symbolic_open_from_json(doc[j]));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ParseError) throw;
      fail("member " + std::to_string(j) + ": " + e.detail());
    }
  }
  return out;
}

nlohmann::json family_to_json(const std::vector<SymbolicOpen>& family) {
  auto out = nlohmann::json::array();
  for (const auto& u : family) out.push_back(symbolic_open_to_json(u));
  return out;
}

std::vector<SymbolicOpen> load_family(const std::string& path) {
  return family_from_json(parse_json_text(read_text_file(path)));
}

}  // namespace maxpoint
