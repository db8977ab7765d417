#pragma once

#include <filesystem>
#include <string>

#include "tropgw/solver.hpp"

namespace tropgw {

// Environment variable naming the cache directory used by the CLI when no
// explicit --cache path is given.
inline constexpr const char* kCacheDirEnvVar = "TROPGW_CACHE_DIR";

// JSONL: a header line with format/version/bounds, then one record
// {"gamma": <canonical config>, "value": "p/q"} per solved invariant, sorted
// by the byte order of the gamma key.  Equal tables serialize to equal bytes.
std::string table_to_jsonl(const InvariantTable& table);

void save_table(const InvariantTable& table, const std::filesystem::path& path);

// Strict inverse of save_table: validates the header, canonical keys,
// lowest-term values and record order.  Never solves anything.
InvariantTable load_table(const std::filesystem::path& path);
InvariantTable table_from_jsonl(const std::string& text, const std::string& origin = "<memory>");

}  // namespace tropgw
