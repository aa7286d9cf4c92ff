#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace critcheck {

/// Runs one command line (args[0] is the program name). Output goes to `out`,
/// diagnostics to `err`; standard input for scans and scripts comes from `in`.
/// Returns 0 on success, 1 when a violation or failed validation was found,
/// 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace critcheck
