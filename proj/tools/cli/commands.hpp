#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "instance.hpp"

namespace tdvr::cli {

enum ExitCode : int { kOk = 0, kParse = 2, kPrecondition = 3, kContract = 4 };

struct CommandOptions {
  std::string command;
  std::optional<std::string> element;  ///< nf / member argument
  std::optional<std::string> order;    ///< overrides the instance order
  std::optional<std::uint64_t> max_degree;
  std::size_t pair_budget = 10000;
  bool trace = false;
  bool dump_slices = false;
};

struct Outcome {
  int exit_code = kOk;
  nlohmann::json report;  ///< machine report (keys sorted by the json type)
  std::string human;      ///< text for standard output
};

bool known_command(const std::string& name);

/// Runs one command; never throws for library errors, which become exit
/// codes and an "error" entry in the report.
Outcome run_command(const Instance& instance, const CommandOptions& options);

/// Report for an instance that failed to load.
Outcome load_failure(const CommandOptions& options, const std::string& message);

/// Pretty-printed report text with a trailing newline.
std::string render(const nlohmann::json& report);

}  // namespace tdvr::cli
