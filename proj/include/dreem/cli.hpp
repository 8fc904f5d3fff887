#pragma once

#include <ostream>

namespace dreem {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes of the dreem_sim tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitConfig = 3,
    kExitIo = 4,
};

/// Entry point of the dreem_sim tool: parses flags, runs every requested
/// protocol, and writes per-run CSVs, aggregate CSVs and manifest.json into
/// the output directory. Diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dreem
