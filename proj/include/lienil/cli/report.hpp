#pragma once

#include <string>

#include "json.hpp"
#include "lienil/classifier.hpp"

namespace lienil::cli {

// Field order is fixed, so dump() output is byte-stable.
nlohmann::ordered_json to_json(const LieReport& report);

std::string render_text(const LieReport& report, bool verbose);

}  // namespace lienil::cli
