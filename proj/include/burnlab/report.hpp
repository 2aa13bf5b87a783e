#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "burnlab/errors.hpp"

namespace burnlab::cli {

// Insertion-ordered JSON keeps report output byte-stable.
using Json = nlohmann::ordered_json;

// Structured result of one CLI command invocation.
struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::string status = "ok";  // "ok" | "error"
  std::string error_code;     // machine-readable, set when status = "error"
  std::string error_message;
  std::int64_t elapsed_ms = 0;
  int exit_code = 0;  // process exit suggestion; 0 means derive from status

  Json to_json(bool include_timing = true) const;
};

// Checks the shape every emitted report must satisfy (mirrors
// schemas/run_report.schema.json). Throws DomainError on violation.
void validate_run_report(const Json& j);

// Exit code conventions: 0 ok, 2 parse/validation, 3 computation failure,
// 4 I/O, 5 undecided.
int exit_code_for(const Error& e);
std::string error_code_for(const Error& e);

}  // namespace burnlab::cli
