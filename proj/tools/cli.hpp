#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace warnet::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitDegraded = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Levenshtein distance over bytes.
std::size_t edit_distance(const std::string& a, const std::string& b);

}  // namespace warnet::cli
