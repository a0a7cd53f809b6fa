#pragma once

#include <string>
#include <vector>

namespace ncclark::cli {

// Full CLI entry point: parses argv, dispatches the subcommand, writes the
// report, and maps outcomes to exit codes (0 pass, 2 inconclusive, 1 failure
// or error). Kept out of main() so tests can drive it in-process.
int runMain(int argc, const char* const* argv);
int runArgs(const std::vector<std::string>& args); // args exclude argv[0]

} // namespace ncclark::cli
