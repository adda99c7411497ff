#pragma once

#include <string>
#include <string_view>

#include "lienil/catalog.hpp"

namespace lienil::cli {

/// Relations `a^k=1; b^2=1|b^2=a^j; a^b=a^e`, separated by ';' or ','.
/// Returns a raw_table spec. Throws InputError with "syntax error" or
/// "unsupported presentation shape" in the message.
GroupSpec parse_presentation(std::string_view text);

/// {"order": n, "table": [[...]], "labels": [...]}, identity at index 0.
/// JSON syntax errors report line and column.
GroupSpec parse_table_json(std::string_view text, std::string name);

GroupSpec load_table_file(const std::string& path);

}  // namespace lienil::cli
