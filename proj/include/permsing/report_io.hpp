#pragma once

#include <string>

#include <json.hpp>

#include "permsing/classifier.hpp"
#include "permsing/ext_half.hpp"

namespace permsing {

/// {"finite": true, "value": {"num": -1, "den": 2}} or
/// {"finite": false, "value": null}.
nlohmann::json to_json(ExtHalf v);
ExtHalf ext_half_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GorensteinReport& g);
nlohmann::json to_json(const ClassificationReport& report);
/// Inverse of to_json; throws InvalidInput on schema violations.
ClassificationReport report_from_json(const nlohmann::json& j);

std::string report_to_text(const ClassificationReport& report);

}  // namespace permsing
