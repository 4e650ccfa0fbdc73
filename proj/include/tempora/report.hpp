#pragma once

// Report serialization. JSON keys come out sorted (nlohmann::json is map-backed);
// CSV has a header row and '.' decimals regardless of locale.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tempora {

enum class Format { JSON, CSV };

Format parse_format(const std::string& s);

// Table report: {"columns": [...], "rows": [[...], ...]} plus any extra keys.
nlohmann::json make_table(const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows);

// JSON: indented dump. CSV: table reports as header + rows; flat objects as a
// header of keys and one row. Nested reports have no CSV form (ValidationError).
std::string serialize(const nlohmann::json& report, Format fmt);

// Shortest round-trip decimal form.
std::string format_number(double v);

}  // namespace tempora
