#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pellkit {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  // a verification/cross-check failed
inline constexpr int kExitUsage = 2;     // bad flags, domains, or I/O
inline constexpr int kExitIntegrity = 3; // internal exactness bug detected

// Runs one invocation. args excludes the program name; data output goes to
// out, diagnostics and timing lines to err. Fully deterministic on the data
// stream for identical args (bench timings are confined to err).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pellkit
