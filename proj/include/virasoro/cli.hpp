#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace virasoro::cli {

// Exit statuses of `run`.
inline constexpr int exit_ok = 0;
inline constexpr int exit_caveat = 1;  // undetermined beyond the level cap, window overflow, failing selftest
inline constexpr int exit_usage = 2;   // bad flags or unparsable input; the message names the token

// Runs one subcommand. `args` excludes the program name. The report goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace virasoro::cli
