#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sensorfft::cli {

/// Process exit codes. Stable across releases.
enum class ExitStatus : int {
    Success = 0,
    Usage = 1,         ///< bad flag or out-of-range parameter
    Data = 2,          ///< unreadable file, malformed data, too few samples
    Verification = 3,  ///< transform check failed
};

/// Runs the CLI with `args` (argv without the program name). Data and
/// reports go to `out`, diagnostics to `err`.
ExitStatus run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sensorfft::cli
