#include "tempora/report.hpp"

#include <charconv>
#include <cmath>

#include "tempora/errors.hpp"

namespace tempora {

using nlohmann::json;

namespace {

std::string csv_cell(const json& v) {
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "";
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  throw ValidationError("report value has no CSV form");
}

std::string join_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line + "\n";
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::JSON;
  if (s == "csv") return Format::CSV;
  throw ValidationError("format must be 'json' or 'csv'");
}

json make_table(const std::vector<std::string>& columns, const std::vector<std::vector<double>>& rows) {
  json r = json::array();
  for (const auto& row : rows) {
    if (row.size() != columns.size()) throw DimensionError("table row width differs from the header");
    r.push_back(row);
  }
  return json{{"columns", columns}, {"rows", std::move(r)}};
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string serialize(const json& report, Format fmt) {
  if (fmt == Format::JSON) return report.dump(2);

  if (report.is_object() && report.contains("columns") && report.contains("rows")) {
    std::vector<std::string> header;
    for (const auto& c : report.at("columns")) header.push_back(c.get<std::string>());
    std::string out = join_row(header);
    for (const auto& row : report.at("rows")) {
      std::vector<std::string> cells;
      for (const auto& v : row) cells.push_back(csv_cell(v));
      out += join_row(cells);
    }
    return out;
  }
  if (report.is_object()) {
    std::vector<std::string> header, cells;
    for (const auto& [k, v] : report.items()) {
      header.push_back(k);
      cells.push_back(csv_cell(v));
    }
    if (header.empty()) return "";
    return join_row(header) + join_row(cells);
  }
  throw ValidationError("report has no CSV form");
}

}  // namespace tempora
