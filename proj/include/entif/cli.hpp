#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "entif/analysis.hpp"

namespace entif {

/// Process exit codes; part of the scripting interface.
enum ExitCode : int {
  kExitOk = 0,
  kExitNotFrame = 1,
  kExitImpossible = 2,
  kExitUnknown = 3,
  kExitUnsupportedOrder = 4,
  kExitParseError = 5,
  kExitUsage = 64,
  kExitFailure = 70,
};

/// One-line human report shared by `construct` and `verify`.
std::string format_report(const FrameReport& report);
/// The same report as a single line of canonical JSON.
std::string format_report_json(const FrameReport& report);

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entif
