#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ppkit/errors.hpp"
#include "ppkit_cli/commands.hpp"
#include "ppkit_cli/workspace.hpp"

int main(int argc, char** argv) {
  using namespace ppkit::cli;
  CLI::App app{"Pp-formula toolkit for finite modules over finite-dimensional algebras", "ppkit"};
  std::string workspacePath, outPath;
  app.add_option("--workspace", workspacePath, "Workspace document")->required();
  app.add_option("--out", outPath, "Write the report to this file");
  app.set_version_flag("--version", kVersion);
  app.prefix_command();
  std::string commands;
  for (const std::string& c : commandNames()) commands += (commands.empty() ? "" : ", ") + c;
  app.footer("Commands: " + commands + "\nGlobal flags come before the command; run '<command> --help' for its flags.");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  CommandResult result;
  try {
    result = runCommand(loadWorkspace(workspacePath), app.remaining());
  } catch (const ppkit::Error& e) {
    result.report = std::string("# ppkit ") + kVersion + " workspace\nerror: " + e.what() + "\n";
    result.exitCode = kExitError;
  }
  if (outPath.empty()) {
    std::cout << result.report;
  } else {
    std::ofstream out(outPath);
    if (!out) {
      std::cerr << "error: cannot write " << outPath << "\n";
      return kExitError;
    }
    out << result.report;
  }
  if (result.exitCode == kExitError) std::cerr << "ppkit: command failed, see report\n";
  return result.exitCode;
}
