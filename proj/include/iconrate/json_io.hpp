#pragma once

#include <json.hpp>

#include "iconrate/sublexical.hpp"

namespace iconrate::json_io {

nlohmann::json to_json(const SubLexicalProfile& profile);
SubLexicalProfile profile_from_json(const nlohmann::json& j, const std::string& where);

}  // namespace iconrate::json_io
