#pragma once

#include <string>

#include <json.hpp>

#include "tbranch/branching.hpp"

namespace tbranch {

enum class OutFormat { Text, Json, Csv, Latex };

// "text", "json", "csv", "latex"; throws UsageError otherwise.
OutFormat parse_out_format(const std::string& s);

std::string render(const BranchTable& t, OutFormat f);
nlohmann::json table_json(const BranchTable& t);

// Grapheme-agnostic width: number of UTF-8 code points.
std::size_t display_width(const std::string& s);

}  // namespace tbranch
