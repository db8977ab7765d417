#include "tropgw/store.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tropgw/json_io.hpp"

namespace tropgw {

namespace {

constexpr const char* kFormatName = "tropgw-invariant-table";
constexpr std::int64_t kFormatVersion = 1;

[[noreturn]] void corrupt(const std::string& origin, std::size_t line, const std::string& what) {
  throw std::runtime_error(origin + ":" + std::to_string(line) + ": corrupt record: " + what);
}

}  // namespace

std::string table_to_jsonl(const InvariantTable& table) {
  Json bounds;
  bounds["max_degree"] =
      table.declared_max_degree ? Json(*table.declared_max_degree) : Json(nullptr);
  bounds["min_chi"] = table.declared_min_chi ? Json(*table.declared_min_chi) : Json(nullptr);
  Json header;
  header["bounds"] = std::move(bounds);
  header["format"] = kFormatName;
  header["version"] = kFormatVersion;

  std::vector<std::pair<std::string, std::string>> records;
  records.reserve(table.size());
  for (const auto& [config, value] : table.entries()) {
    Json rec;
    rec["gamma"] = config_to_json(config);
    rec["value"] = format_rational(value);
    records.emplace_back(rec["gamma"].dump(), rec.dump());
  }
  std::sort(records.begin(), records.end());

  std::string out = header.dump();
  out += '\n';
  for (const auto& [key, line] : records) {
    out += line;
    out += '\n';
  }
  return out;
}

void save_table(const InvariantTable& table, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("save_table: cannot open " + path.string());
  file << table_to_jsonl(table);
  if (!file) throw std::runtime_error("save_table: write failed for " + path.string());
}

InvariantTable table_from_jsonl(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw std::runtime_error(origin + ": empty table file");
  ++line_no;
  Json header;
  try {
    header = Json::parse(line);
  } catch (const Json::exception& e) {
    corrupt(origin, line_no, e.what());
  }
  if (!header.is_object() || !header.contains("format") || !header.contains("version"))
    corrupt(origin, line_no, "missing format/version header");
  if (header.at("format") != kFormatName || header.at("version") != kFormatVersion)
    throw std::runtime_error(origin + ": version mismatch (expected " + std::string(kFormatName) +
                             " v" + std::to_string(kFormatVersion) + ")");

  InvariantTable table;
  if (header.contains("bounds") && header.at("bounds").is_object()) {
    const Json& bounds = header.at("bounds");
    if (bounds.contains("max_degree") && bounds.at("max_degree").is_number_integer())
      table.declared_max_degree = bounds.at("max_degree").get<std::int64_t>();
    if (bounds.contains("min_chi") && bounds.at("min_chi").is_number_integer())
      table.declared_min_chi = bounds.at("min_chi").get<std::int64_t>();
  }

  std::string previous_key;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) corrupt(origin, line_no, "blank line");
    Json rec;
    try {
      rec = Json::parse(line);
    } catch (const Json::exception& e) {
      corrupt(origin, line_no, e.what());
    }
    if (!rec.is_object() || !rec.contains("gamma") || !rec.contains("value") || rec.size() != 2)
      corrupt(origin, line_no, "expected {\"gamma\", \"value\"}");
    CurveConfig config;
    Rational value;
    try {
      config = config_from_json(rec.at("gamma"), /*require_canonical=*/true);
      if (!rec.at("value").is_string()) throw std::invalid_argument("value must be a string");
      value = parse_rational(rec.at("value").get<std::string>());
    } catch (const std::exception& e) {
      corrupt(origin, line_no, e.what());
    }
    std::string key = rec.at("gamma").dump();
    if (!previous_key.empty() && !(previous_key < key))
      corrupt(origin, line_no, "records not sorted by canonical key");
    previous_key = std::move(key);
    try {
      table.insert_solved(config, value);
    } catch (const std::exception& e) {
      corrupt(origin, line_no, e.what());
    }
  }
  return table;
}

InvariantTable load_table(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("load_table: cannot open " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return table_from_jsonl(buffer.str(), path.string());
}

}  // namespace tropgw
