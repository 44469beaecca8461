#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modeconv::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 2,
  kPhysicsError = 3,
};

/// Runs one `modeconv` invocation. `args` excludes the program name.
/// Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes `content` to `path` via a sibling temporary file and a rename.
void write_file_atomically(const std::string& path, const std::string& content);

}  // namespace modeconv::cli
