#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mspread::cli {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kOk = 0,
  /// A valid negative mathematical answer (NO, NONISO).
  kNegative = 1,
  kUsage = 2,
  kTooLarge = 3,
  kInternal = 4,
};

/// Dispatches one subcommand. `args` excludes the program name. Results go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct GoldenRow {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Replays the worked examples with their published answers.
std::vector<GoldenRow> replay_golden();

}  // namespace mspread::cli
