#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wdm {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_capability = 3;

/// Runs one `wdm` subcommand. args excludes the program name; "-" as a file
/// argument reads `in`.
auto run_command(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
    -> int;

}
