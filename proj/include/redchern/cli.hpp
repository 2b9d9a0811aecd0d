#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace redchern::cli {

enum ExitCode : int {
  kOk = 0,
  kIdentityFailure = 1,
  kUsage = 2,
  kIoFailure = 3,
};

/// Name of the environment variable giving the default output directory.
inline constexpr const char* kOutputDirEnv = "REDCHERN_OUTPUT_DIR";

enum class Format { text, latex, json };

/// Throws UsageError for anything but "text", "latex", "json".
Format parse_format(const std::string& name);

/// cbar_r at level n (closed formula) in the requested format.
std::string render_formula(int n, int r, Format format);

/// psi, phi, lead and N at rank n.
std::string render_universal(int n, Format format, int max_rank = 6);

/// The regression table for ranks 2..max_rank, pretty-printed JSON with a trailing newline.
std::string table_json(int max_rank);

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace redchern::cli
