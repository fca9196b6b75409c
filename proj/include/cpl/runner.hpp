#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cpl/group.hpp"

namespace cpl {

enum class Command { info, classes, eta, verify, reproduce, scan };

std::string to_string(Command c);

/// Parsed invocation; one command per run. Shared by the CLI and the tests
/// so determinism can be checked at the report level.
struct RunConfig {
  Command command = Command::info;

  std::vector<std::string> group_specs;  // grammar expressions
  std::vector<std::string> input_files;  // generator JSON files
  std::string catalog_profile;           // "", "smoke" or "full"

  std::string theorem;  // A | B | T2.4 | L4.1 | T4.2 | ETA_PGROUP
  int union_depth = 1;
  std::size_t max_order = kDefaultMaxOrder;

  // eta selectors
  int rep_order = 0;
  int rep_index = -1;
  int b_rep_index = -1;
  bool with_inverse = false;

  // reproduce
  std::string example;  // "2.2" | "3.2" | "remark4"
  int m = 0;
  int p = 0;

  std::string question;         // "open4" | "conjecture"
  std::string format = "json";  // json | csv | text (scan also: jsonl)
  std::string output_path;      // empty = stdout
};

struct RunResult {
  int exit_code = 0;           // 0 pass, 1 violations found
  nlohmann::json document;     // {schema_version, command, config, reports, wall_time_ms}
  std::string rendered;        // document in the requested format
};

// Throws cpl::Error subclasses on usage/ingestion problems (CLI exit 2).
RunResult run(const RunConfig& config);

nlohmann::json config_to_json(const RunConfig& config);

}  // namespace cpl
