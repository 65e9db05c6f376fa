#pragma once

#include "mlie/report.hpp"
#include "mlie/workspace.hpp"

namespace mlie {

/// Command-line surface. Exit codes: 0 = property holds / computation
/// succeeded, 1 = property fails, 2 = usage or parse error, 3 = outside the
/// declared scope (Unsupported / NotSolvable / undecided).
struct CliOptions {
  std::string command;
  std::string file;
  std::string metric;                          // -m NAME
  std::string ideal;                           // --ideal NAME
  std::vector<std::string> family;             // --family LIST (comma separated)
  std::optional<std::pair<std::string, std::string>> decomp;  // --decomp G,A
  std::optional<std::string> candidate_h;      // --candidate-H VEC
  bool json = false;
  bool oracle = false;
};

/// Dispatches a parsed command against a workspace. Throws mlie errors for
/// usage problems; run_cli maps them onto exit codes.
Report run_command(const CliOptions& opt, const Workspace& ws);

int run_cli(int argc, char** argv);

}  // namespace mlie
