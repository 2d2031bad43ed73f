#include "c2zhu/record.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace c2zhu {

namespace {

std::string value_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += value_text(v[i]);
    }
    return out + ")";
  }
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string key_values(const Json& object) {
  std::string out;
  for (const auto& [key, value] : object.items()) {
    if (!out.empty()) out += ' ';
    out += key + "=" + value_text(value);
  }
  return out;
}

std::vector<std::string> row_columns(const std::vector<Json>& rows) {
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& [key, value] : row.items())
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
  return columns;
}

std::string emit_text(const OutputRecord& r) {
  std::string out = r.command;
  if (!r.params.empty()) out += " " + key_values(r.params);
  out += "\n";
  for (const auto& row : r.rows) out += "  " + key_values(row) + "\n";
  if (!r.totals.empty()) out += "totals: " + key_values(r.totals) + "\n";
  for (const auto& v : r.verdicts) {
    out += "verdict " + v.name + ": " + (v.pass ? "pass" : "FAIL");
    if (!v.detail.empty()) out += " (" + v.detail + ")";
    out += "\n";
  }
  return out;
}

std::string emit_csv(const OutputRecord& r) {
  std::string out;
  const auto columns = row_columns(r.rows);
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + csv_field(columns[i]);
  if (!columns.empty()) out += "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      if (row.contains(columns[i])) out += csv_field(value_text(row[columns[i]]));
    }
    out += "\n";
  }
  for (const auto& [key, value] : r.totals.items()) out += "# " + key + "=" + value_text(value) + "\n";
  for (const auto& v : r.verdicts)
    out += "# verdict " + v.name + "=" + (v.pass ? "pass" : "fail") + "\n";
  return out;
}

}  // namespace

bool OutputRecord::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

Json to_json(const OutputRecord& record) {
  Json verdicts = Json::array();
  for (const auto& v : record.verdicts)
    verdicts.push_back({{"name", v.name}, {"status", v.pass ? "pass" : "fail"}, {"detail", v.detail}});
  Json rows = Json::array();
  for (const auto& row : record.rows) rows.push_back(row);
  return {{"command", record.command},   {"params", record.params},
          {"rows", std::move(rows)},     {"totals", record.totals},
          {"verdicts", std::move(verdicts)}, {"elapsed_ms", record.elapsed_ms}};
}

OutputRecord record_from_json(const Json& j) {
  OutputRecord r;
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  for (const auto& row : j.at("rows")) r.rows.push_back(row);
  r.totals = j.at("totals");
  for (const auto& v : j.at("verdicts")) {
    const auto status = v.at("status").get<std::string>();
    if (status != "pass" && status != "fail") throw std::invalid_argument("bad verdict status");
    r.verdicts.push_back({v.at("name").get<std::string>(), status == "pass",
                          v.at("detail").get<std::string>()});
  }
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

std::string emit(const OutputRecord& record, Format format) {
  switch (format) {
    case Format::json:
      return to_json(record).dump(2) + "\n";
    case Format::csv:
      return emit_csv(record);
    case Format::text:
      break;
  }
  return emit_text(record);
}

Json json_integer(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(value);
  return value.str();
}

Json json_weight(const SlWeight& w) { return w.parts.padded(w.rank - 1); }

Json json_weight(const Partition& p) { return p.parts(); }

std::vector<Json> decomposition_rows(const IrrDecomposition& d) {
  std::vector<Json> rows;
  for (const auto& [w, mult] : d.entries())
    rows.push_back({{"weight", json_weight(w)},
                    {"multiplicity", json_integer(mult)},
                    {"dim", json_integer(sl_dim(w))}});
  return rows;
}

}  // namespace c2zhu
