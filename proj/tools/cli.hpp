#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dessins::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;        // success / positive decision
inline constexpr int kInvalid = 1;   // input parsed but fails validation
inline constexpr int kUsage = 2;     // unparsable input, bad flags, file I/O
inline constexpr int kNegative = 3;  // negative decision (not isomorphic)
inline constexpr int kMismatch = 4;  // internal cross-check failure

/// Runs one subcommand.  args exclude the program name; everything the
/// command prints goes to the given streams, so tests can call this
/// directly.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dessins::cli
