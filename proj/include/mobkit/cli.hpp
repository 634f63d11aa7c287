#pragma once

#include <iosfwd>

namespace mobkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// Parses argv, runs one subcommand and writes its result to `out` as plain
// text or as a JSON envelope {command, inputs, result, format_version}.
// Diagnostics go to `err`. Returns kExitOk, kExitDomainError or kExitUsageError.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mobkit::cli
