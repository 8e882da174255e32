#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stconn::cli
{

/* exit codes */
inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_budget = 3;
inline constexpr int exit_failed = 4;

/* runs the tool; args excludes the program name */
int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err );

} // namespace stconn::cli
