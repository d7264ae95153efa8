#pragma once

#include <iosfwd>

namespace fuzzytop::cli {

/// Exit codes: 0 success, 1 a law or verdict failed, 2 malformed input.
inline constexpr int kOk = 0;
inline constexpr int kVerdictFailed = 1;
inline constexpr int kMalformed = 2;

/// Runs one subcommand; the JSON result goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fuzzytop::cli
