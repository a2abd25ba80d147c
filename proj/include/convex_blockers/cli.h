#ifndef CONVEX_BLOCKERS_CLI_H_
#define CONVEX_BLOCKERS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace convex_blockers {

// Exit statuses: 0 success (or verify PASS), 1 domain error / FAIL /
// not-a-blocker, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Dispatches one command line (args excludes the program name). Structured
// output goes to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace convex_blockers

#endif  // CONVEX_BLOCKERS_CLI_H_
