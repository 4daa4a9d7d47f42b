#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weyl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitFailure = 2;

/// Entry point of the `weylsnow` tool. Subcommands: generate, verify, classes, orders, bench.
/// Returns 0 on success, 1 when a verification finds a mismatch, 2 on any other failure
/// (bad usage, I/O, integrity, ceiling refusal).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weyl::cli
