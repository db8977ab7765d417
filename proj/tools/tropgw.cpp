#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tropgw/absolute.hpp"
#include "tropgw/json_io.hpp"
#include "tropgw/solver.hpp"
#include "tropgw/store.hpp"

namespace {

using namespace tropgw;

// --gamma accepts the bare components array '[[[2,-2]]]' (outgoing-only) or
// the full object form with an "incoming" field.
CurveConfig parse_gamma(const std::string& text) {
  Json j = Json::parse(text);
  if (j.is_array()) {
    Json wrapped;
    wrapped["components"] = j;
    wrapped["incoming"] = nullptr;
    return config_from_json(wrapped);
  }
  return config_from_json(j);
}

LatticeVector parse_incoming(std::string text) {
  std::erase_if(text, [](char c) { return c == '(' || c == ')' || c == ' '; });
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("expected \"(y1,y2)\", got '" + text + "'");
  return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
}

std::optional<std::filesystem::path> resolve_cache(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* dir = std::getenv(kCacheDirEnvVar); dir && *dir)
    return std::filesystem::path(dir) / "invariants.jsonl";
  return std::nullopt;
}

InvariantTable open_table(const std::optional<std::filesystem::path>& cache) {
  std::error_code ec;
  if (cache && std::filesystem::exists(*cache, ec) && std::filesystem::file_size(*cache, ec) > 0)
    return load_table(*cache);
  return InvariantTable{};
}

void persist(const InvariantTable& table, const std::optional<std::filesystem::path>& cache) {
  if (!cache) return;
  if (cache->has_parent_path()) std::filesystem::create_directories(cache->parent_path());
  save_table(table, *cache);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact curve counts for iterated blowups of the plane: relative invariants via "
               "the sweep recursion, absolute counts via the symmetric-function substitution"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string cache_flag;
  app.add_option("--cache", cache_flag,
                 "invariant table file to load and extend (default: $" +
                     std::string(kCacheDirEnvVar) + "/invariants.jsonl when set)");

  auto* cmd_invariant = app.add_subcommand("invariant", "print n_Γ for one configuration");
  std::string gamma_text;
  cmd_invariant->add_option("--gamma", gamma_text, "configuration as JSON, e.g. '[[[2,-2]]]'")
      ->required();

  auto* cmd_table = app.add_subcommand("table", "solve all invariants within bounds");
  std::int64_t max_degree = 0, min_chi = 0;
  bool as_json = false;
  cmd_table->add_option("--max-degree", max_degree, "largest degree to solve")->required();
  cmd_table->add_option("--min-chi", min_chi, "smallest Euler characteristic to solve")->required();
  cmd_table->add_flag("--json", as_json, "emit one JSON document instead of text lines");

  auto* cmd_absolute = app.add_subcommand("absolute", "count rigid curves in a blowup of the plane");
  std::int64_t points = 0, query_genus = 0;
  std::string class_text;
  cmd_absolute->add_option("--points", points, "number of blown-up points")->required();
  cmd_absolute->add_option("--genus", query_genus, "genus of the counted curves")->required();
  cmd_absolute->add_option("--class", class_text, "homology class \"d:c1,...,cn\"")->required();

  auto* cmd_verify = app.add_subcommand("verify", "check the left/right sweep identity");
  std::int64_t verify_degree = 0;
  std::optional<std::int64_t> verify_chi;
  std::string y_text;
  cmd_verify->add_option("--max-degree", verify_degree, "compare output terms up to this degree")
      ->required();
  cmd_verify->add_option("--min-chi", verify_chi,
                         "Euler characteristic floor of the comparison window "
                         "(default -(2*max-degree+1))");
  cmd_verify->add_option("--y", y_text, "single incoming vector \"(y1,y2)\" instead of the default set");

  auto* cmd_kontsevich =
      app.add_subcommand("oracle-kontsevich", "print the classical genus-0 plane-curve counts");
  std::int64_t oracle_degree = 0;
  cmd_kontsevich->add_option("--max-degree", oracle_degree, "largest degree to print")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  auto cache = resolve_cache(cache_flag);

  if (*cmd_invariant) {
    InvariantTable table = open_table(cache);
    CurveConfig gamma = parse_gamma(gamma_text);
    std::cout << format_rational(table.invariant(gamma)) << "\n";
    persist(table, cache);
    return 0;
  }

  if (*cmd_table) {
    InvariantTable table = open_table(cache);
    extend_invariant_table(table, max_degree, min_chi);
    persist(table, cache);
    if (as_json) {
      Json entries = Json::array();
      for (const auto& [config, value] : table.entries()) {
        Json rec;
        rec["gamma"] = config_to_json(config);
        rec["value"] = format_rational(value);
        entries.push_back(std::move(rec));
      }
      Json out;
      out["max_degree"] = max_degree;
      out["min_chi"] = min_chi;
      out["entries"] = std::move(entries);
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& [config, value] : table.entries())
        std::cout << canonical_key(config) << "\t" << format_rational(value) << "\n";
    }
    return 0;
  }

  if (*cmd_absolute) {
    HomologyClass beta = HomologyClass::parse(class_text);
    InvariantTable table = open_table(cache);
    Rational value = absolute_invariant(points, query_genus, beta, table);
    std::cout << format_rational(value) << "\n";
    persist(table, cache);
    return 0;
  }

  if (*cmd_verify) {
    std::vector<LatticeVector> ys =
        y_text.empty() ? default_verification_incomings()
                       : std::vector<LatticeVector>{parse_incoming(y_text)};
    std::int64_t chi_floor = verify_chi.value_or(-(2 * verify_degree + 1));
    InvariantTable table = open_table(cache);
    bool all_ok = true;
    for (LatticeVector y : ys) {
      IdentityReport report = verify_identity(table, y, verify_degree, chi_floor);
      std::cout << "y=" << to_string(y) << " window: degree<=" << verify_degree
                << " chi>=" << chi_floor << " compared=" << report.compared << " : "
                << (report.ok() ? "OK" : "MISMATCH") << "\n";
      for (const IdentityMismatch& m : report.mismatches)
        std::cout << "  " << canonical_key(m.config) << " left=" << format_rational(m.left)
                  << " right=" << format_rational(m.right) << "\n";
      all_ok = all_ok && report.ok();
    }
    persist(table, cache);
    return all_ok ? 0 : 1;
  }

  if (*cmd_kontsevich) {
    std::vector<Rational> counts = kontsevich(oracle_degree);
    for (std::size_t i = 0; i < counts.size(); ++i)
      std::cout << "N[" << (i + 1) << "] = " << format_rational(counts[i]) << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
