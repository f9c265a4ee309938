#include "maxpoint/model_io.hpp"

#include "maxpoint/poset_io.hpp"

namespace maxpoint {

namespace {

std::vector<std::string> string_array(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw Error(ErrorCode::ParseError, std::string("model needs a \"") + key + "\" array");
  }
  std::vector<std::string> out;
  for (const auto& v : doc[key]) {
    if (!v.is_string()) throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

ProductModel model_from_json(const nlohmann::json& doc, const ModelOptions& opts) {
  auto p = poset_from_json(doc);
  auto xs = string_array(doc, "labelX");
  auto ys = string_array(doc, "labelY");
  if (!doc.contains("maxLabeling") || !doc["maxLabeling"].is_object()) {
    throw Error(ErrorCode::ParseError, "model needs a \"maxLabeling\" object");
  }
  MaxLabeling labeling;
  for (const auto& [element, pair] : doc["maxLabeling"].items()) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw Error(ErrorCode::ParseError, "maxLabeling values must be [x, y] label pairs");
    }
    labeling.push_back({element, {pair[0].get<std::string>(), pair[1].get<std::string>()}});
  }
  if (!doc.contains("y0") || !doc["y0"].is_string()) throw Error(ErrorCode::ParseError, "model needs a \"y0\" string");
  return ProductModel::make(std::move(p), std::move(xs), std::move(ys), labeling, doc["y0"].get<std::string>(), opts);
}

nlohmann::json model_to_json(const ProductModel& m) {
  auto doc = poset_to_json(m.poset());
  doc["labelX"] = m.x_labels();
  doc["labelY"] = m.y_labels();
  auto labeling = nlohmann::json::object();
  for (std::size_t x = 0; x < m.x_count(); ++x) {
    for (std::size_t y = 0; y < m.y_count(); ++y) {
      labeling[m.poset().label(m.element_at(x, y))] = {m.x_labels()[x], m.y_labels()[y]};
    }
  }
  doc["maxLabeling"] = std::move(labeling);
  doc["y0"] = m.y0_label();
  return doc;
}

ProductModel load_model(const std::string& path, const ModelOptions& opts) {
  return model_from_json(parse_json_text(read_text_file(path)), opts);
}

}  // namespace maxpoint
