#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semi::cli {

// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // non-associative input, violations found
inline constexpr int kExitUsage = 2;   // bad arguments or unreadable table file

// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semi::cli
