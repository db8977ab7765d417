#include "tropgw/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropgw {

Json vector_to_json(LatticeVector v) { return Json::array({v.a, v.b}); }

LatticeVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw std::invalid_argument("vector: expected [a,b] with integer entries");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

Json config_to_json(const CurveConfig& c) {
  CurveConfig canon = canonicalize(c);
  Json components = Json::array();
  for (const Component& comp : canon.components) {
    Json vs = Json::array();
    for (LatticeVector v : comp.vectors) vs.push_back(vector_to_json(v));
    components.push_back(std::move(vs));
  }
  Json j;
  j["components"] = std::move(components);
  if (canon.incoming) {
    j["incoming"] = Json{{"component", canon.incoming->component},
                         {"vector", vector_to_json(canon.incoming->vector)}};
  } else {
    j["incoming"] = nullptr;
  }
  return j;
}

CurveConfig config_from_json(const Json& j, bool require_canonical) {
  if (!j.is_object() || !j.contains("components") || !j.contains("incoming") || j.size() != 2)
    throw std::invalid_argument("config: expected {\"components\": ..., \"incoming\": ...}");
  const Json& components = j.at("components");
  if (!components.is_array()) throw std::invalid_argument("config: components must be an array");
  CurveConfig raw;
  for (const Json& comp : components) {
    if (!comp.is_array()) throw std::invalid_argument("config: component must be an array");
    Component out;
    for (const Json& v : comp) out.vectors.push_back(vector_from_json(v));
    raw.components.push_back(std::move(out));
  }
  const Json& incoming = j.at("incoming");
  if (!incoming.is_null()) {
    if (!incoming.is_object() || !incoming.contains("component") || !incoming.contains("vector") ||
        incoming.size() != 2 || !incoming.at("component").is_number_unsigned())
      throw std::invalid_argument("config: incoming must be null or {\"component\", \"vector\"}");
    raw.incoming = IncomingMark{incoming.at("component").get<std::size_t>(),
                                vector_from_json(incoming.at("vector"))};
  }
  CurveConfig canon = canonicalize(raw);
  if (require_canonical && canon != raw)
    throw std::invalid_argument("config: not in canonical form");
  return canon;
}

std::string canonical_key(const CurveConfig& c) { return config_to_json(c).dump(); }

Json formal_sum_to_json(const FormalSum& sum) {
  std::vector<std::pair<std::string, Json>> records;
  records.reserve(sum.size());
  for (const auto& [config, value] : sum.terms()) {
    Json rec;
    rec["config"] = config_to_json(config);
    rec["value"] = format_rational(value);
    records.emplace_back(rec["config"].dump(), std::move(rec));
  }
  std::sort(records.begin(), records.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  Json out = Json::array();
  for (auto& [key, rec] : records) out.push_back(std::move(rec));
  return out;
}

FormalSum formal_sum_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("formal sum: expected an array of records");
  FormalSum sum;
  for (const Json& rec : j) {
    if (!rec.is_object() || !rec.contains("config") || !rec.contains("value"))
      throw std::invalid_argument("formal sum: record must have config and value");
    sum.add_term(config_from_json(rec.at("config")),
                 parse_rational(rec.at("value").get<std::string>()));
  }
  return sum;
}

}  // namespace tropgw
