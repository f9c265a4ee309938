#pragma once

#include <string>

#include <json.hpp>

#include "maxpoint/factorization.hpp"

namespace maxpoint {

// Poset fields plus "labelX", "labelY", "maxLabeling" ({element: [x, y]})
// and "y0".
ProductModel model_from_json(const nlohmann::json& doc, const ModelOptions& opts = {});
nlohmann::json model_to_json(const ProductModel& m);
ProductModel load_model(const std::string& path, const ModelOptions& opts = {});

}  // namespace maxpoint
