#pragma once

#include "tdual/abelian.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tdual::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 2,
  kParseError = 3,
  kOracleRefused = 4,
};

/// One invocation's output document: {command, inputs, result, warnings}.
struct ComputationResult {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> warnings;

  std::string serialize() const;
  static ComputationResult parse(const std::string& text);

  friend bool operator==(const ComputationResult&, const ComputationResult&) = default;
};

void to_json(nlohmann::json& j, const ComputationResult& r);
void from_json(const nlohmann::json& j, ComputationResult& r);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json integer_to_json(const Integer& x);
/// {"free_rank": r, "torsion": [d_1, ...]}
nlohmann::json group_to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const nlohmann::json& j);

/// Every leaf subcommand path, e.g. "tdual gamma-point".
const std::vector<std::string>& subcommand_table();

/// Runs one invocation. `args` excludes the program name. The serialized
/// ComputationResult goes to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tdual::cli
