#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "patrolgame/json_io.hpp"

namespace patrolgame::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInfeasible = 2,
  kUnsupportedFamily = 3,
  kGuardExceeded = 4,
  kVerificationFailed = 5,
};

/// Scenario file contents (`--config`). Command-line flags take precedence
/// over every field that is set on both.
struct ScenarioConfig {
  std::optional<FamilySpec> graph;
  std::optional<std::vector<int>> tau;
  std::optional<int> budget;
  std::string mode;  // solve | allocate | co-optimize | simulate | verify
  std::optional<std::int64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::optional<Matrix> strategy;  // explicit P for simulate
};

ScenarioConfig scenario_from_json(const Json& j);
ScenarioConfig load_scenario(const std::string& path);

/// Parses `args` (without the program name), runs the subcommand and returns
/// the process exit code. Documents go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace patrolgame::cli
