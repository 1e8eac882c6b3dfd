#include "pellsg/cli/record.hpp"

#include <stdexcept>

namespace pellsg::cli {

std::optional<bool> QuantityValues::agrees() const {
  if (sources.size() < 2) return std::nullopt;
  for (const auto& [name, value] : sources) {
    if (value != sources.front().second) return false;
  }
  return true;
}

bool OutputRecord::consistent() const {
  for (const auto& q : values) {
    if (q.agrees() == false) return false;
  }
  return true;
}

Json to_json(const OutputRecord& record) {
  Json j;
  j["family"] = record.family;
  if (record.u) j["u"] = *record.u;
  if (record.i) j["i"] = *record.i;
  if (record.k) j["k"] = *record.k;
  Json gens = Json::array();
  for (const auto& g : record.generators) gens.push_back(to_string(g));
  j["generators"] = std::move(gens);
  j["p"] = record.p;
  Json values = Json::object();
  Json agrees = Json::object();
  for (const auto& q : record.values) {
    Json by_source = Json::object();
    for (const auto& [source, value] : q.sources) by_source[source] = to_string(value);
    values[q.quantity] = std::move(by_source);
    if (auto a = q.agrees()) agrees[q.quantity] = *a;
  }
  j["values"] = std::move(values);
  if (!agrees.empty()) j["agrees"] = std::move(agrees);
  j["forced"] = record.forced;
  return j;
}

namespace {

std::optional<std::uint64_t> optional_index(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<std::uint64_t>();
}

}  // namespace

OutputRecord record_from_json(const Json& j) {
  try {
    OutputRecord r;
    r.family = j.at("family").get<std::string>();
    r.u = optional_index(j, "u");
    r.i = optional_index(j, "i");
    r.k = optional_index(j, "k");
    for (const auto& g : j.at("generators")) r.generators.push_back(parse_integer(g.get<std::string>()));
    r.p = j.at("p").get<std::uint64_t>();
    for (const auto& [quantity, by_source] : j.at("values").items()) {
      QuantityValues q{quantity, {}};
      for (const auto& [source, value] : by_source.items()) {
        q.sources.emplace_back(source, parse_integer(value.get<std::string>()));
      }
      if (j.contains("agrees") && j["agrees"].contains(quantity) &&
          q.agrees() != j["agrees"][quantity].get<bool>()) {
        throw std::invalid_argument("agrees flag of " + quantity + " contradicts its values");
      }
      r.values.push_back(std::move(q));
    }
    r.forced = j.at("forced").get<bool>();
    return r;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

void write_jsonl(std::ostream& out, const OutputRecord& record) { out << to_json(record).dump() << '\n'; }

void write_csv_rows(std::ostream& out, const OutputRecord& record) {
  std::string family = record.family;
  if (family == "gens") {
    family.clear();
    for (std::size_t t = 0; t < record.generators.size(); ++t) {
      if (t) family += ';';
      family += to_string(record.generators[t]);
    }
  }
  const auto index = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& q : record.values) {
    const auto agrees = q.agrees();
    for (const auto& [source, value] : q.sources) {
      out << family << ',' << index(record.u) << ',' << index(record.i) << ',' << index(record.k) << ','
          << record.p << ',' << q.quantity << ',' << source << ',' << to_string(value) << ','
          << (agrees ? (*agrees ? "true" : "false") : "") << '\n';
    }
  }
}

}  // namespace pellsg::cli
