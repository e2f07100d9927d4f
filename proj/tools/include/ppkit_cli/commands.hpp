#pragma once

#include <string>
#include <vector>

#include "ppkit_cli/workspace.hpp"

namespace ppkit::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitError = 2 };

struct CommandResult {
  std::string report;
  int exitCode = kExitOk;
};

// args[0] is the command name, the rest its long-form flags. The report
// starts with a "# ppkit <version> <command>" header line; errors are
// reported in the body with exit code 2.
CommandResult runCommand(const Workspace& ws, const std::vector<std::string>& args);

// Names of all commands, in help order.
const std::vector<std::string>& commandNames();

}  // namespace ppkit::cli
