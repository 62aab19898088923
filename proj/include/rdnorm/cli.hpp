#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rdnorm::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_exceptions = 1;  // verify found exceptions
inline constexpr int exit_usage = 2;       // usage or domain error

// Runs one command line (without the program name). Results go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rdnorm::cli
