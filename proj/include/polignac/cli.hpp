#pragma once

#include <iosfwd>

namespace polignac {

// Exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;    // bad flags or domain error
inline constexpr int kExitResource = 2; // cap exceeded or I/O failure
inline constexpr int kExitFinding = 3;  // counterexample or bound violation (output still written)

/// Runs the command line. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace polignac
