#include "burnlab/report.hpp"

namespace burnlab::cli {

Json RunReport::to_json(bool include_timing) const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["status"] = status;
  if (status == "error") {
    j["error"] = Json{{"code", error_code}, {"message", error_message}};
  }
  if (include_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

void validate_run_report(const Json& j) {
  if (!j.is_object()) throw DomainError("run report must be a JSON object");
  auto need = [&j](const char* key) -> const Json& {
    if (!j.contains(key)) throw DomainError(std::string("run report lacks field '") + key + "'");
    return j.at(key);
  };
  if (!need("command").is_string() || need("command").get<std::string>().empty())
    throw DomainError("run report command must be a nonempty string");
  if (!need("inputs").is_object()) throw DomainError("run report inputs must be an object");
  if (!need("results").is_object()) throw DomainError("run report results must be an object");
  const Json& status = need("status");
  if (!status.is_string() ||
      (status.get<std::string>() != "ok" && status.get<std::string>() != "error"))
    throw DomainError("run report status must be \"ok\" or \"error\"");
  if (status.get<std::string>() == "error") {
    if (!j.contains("error") || !j["error"].is_object())
      throw DomainError("error report needs an error object");
    const Json& e = j["error"];
    if (!e.contains("code") || !e["code"].is_string() || e["code"].get<std::string>().empty())
      throw DomainError("error report needs a machine-readable code");
    if (!e.contains("message") || !e["message"].is_string())
      throw DomainError("error report needs a message");
  }
  if (j.contains("elapsed_ms")) {
    if (!j["elapsed_ms"].is_number_integer() || j["elapsed_ms"].get<std::int64_t>() < 0)
      throw DomainError("elapsed_ms must be a nonnegative integer");
  }
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 2;
  if (dynamic_cast<const DomainError*>(&e)) return 2;
  if (dynamic_cast<const IoError*>(&e)) return 4;
  if (dynamic_cast<const UndecidedError*>(&e)) return 5;
  return 3;
}

std::string error_code_for(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse_error";
  if (dynamic_cast<const DomainError*>(&e)) return "domain_error";
  if (dynamic_cast<const CapacityError*>(&e)) return "capacity_error";
  if (dynamic_cast<const NotFoundError*>(&e)) return "not_found";
  if (dynamic_cast<const SingularityError*>(&e)) return "singularity_error";
  if (dynamic_cast<const NumericError*>(&e)) return "numeric_error";
  if (dynamic_cast<const UndecidedError*>(&e)) return "undecided";
  if (dynamic_cast<const IoError*>(&e)) return "io_error";
  if (dynamic_cast<const StateError*>(&e)) return "state_error";
  return "internal_error";
}

}  // namespace burnlab::cli
