#pragma once

#include "c2zhu/numeric.hpp"
#include "c2zhu/tensor.hpp"
#include "c2zhu/weights.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace c2zhu {

using Json = nlohmann::ordered_json;

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;

  bool operator==(const Verdict&) const = default;
};

/// Result of one CLI command. JSON layout:
/// {command, params, rows[], totals, verdicts[], elapsed_ms}
struct OutputRecord {
  std::string command;
  Json params = Json::object();
  std::vector<Json> rows;
  Json totals = Json::object();
  std::vector<Verdict> verdicts;
  std::int64_t elapsed_ms = 0;

  bool all_pass() const;
  bool operator==(const OutputRecord&) const = default;
};

enum class Format { text, csv, json };

Format parse_format(std::string_view name);

Json to_json(const OutputRecord& record);
OutputRecord record_from_json(const Json& j);

std::string emit(const OutputRecord& record, Format format);

/// JSON number when the value fits in int64, decimal string otherwise.
Json json_integer(const Integer& value);
/// Padded parts as an integer array.
Json json_weight(const SlWeight& w);
Json json_weight(const Partition& p);

/// One row per irreducible: {weight, multiplicity, dim}, canonical order.
std::vector<Json> decomposition_rows(const IrrDecomposition& d);

}  // namespace c2zhu
