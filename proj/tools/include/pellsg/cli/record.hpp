#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "pellsg/integer.hpp"

namespace pellsg::cli {

using Json = nlohmann::ordered_json;

/// Values of one quantity ("g", "n" or "s") at one level, keyed by source
/// ("closed_form", "engine", "oracle") in insertion order.
struct QuantityValues {
  std::string quantity;
  std::vector<std::pair<std::string, Integer>> sources;

  /// Present iff at least two sources were computed.
  std::optional<bool> agrees() const;

  friend bool operator==(const QuantityValues&, const QuantityValues&) = default;
};

/// One output record: every requested quantity of one generator set at one p.
struct OutputRecord {
  /// "even", "odd-odd", "odd-even", or "gens" for raw generators.
  std::string family;
  std::optional<std::uint64_t> u, i, k;
  std::vector<Integer> generators;
  std::uint64_t p = 0;
  std::vector<QuantityValues> values;
  /// A closed form was evaluated outside its proven range on request.
  bool forced = false;

  /// True unless some quantity has disagreeing sources.
  bool consistent() const;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

Json to_json(const OutputRecord& record);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
OutputRecord record_from_json(const Json& json);

inline constexpr const char* kCsvHeader = "family,u,i,k,p,quantity,source,value,agrees";

/// One compact JSON object per line.
void write_jsonl(std::ostream& out, const OutputRecord& record);

/// One CSV row per (quantity, source); raw generators go in the family column
/// joined with ';'.
void write_csv_rows(std::ostream& out, const OutputRecord& record);

}  // namespace pellsg::cli
