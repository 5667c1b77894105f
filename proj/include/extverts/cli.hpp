#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extverts {

enum exit_code : int { exit_pass = 0, exit_failure = 1, exit_usage = 2 };

/// Entry point of the `extverts` command; args excludes the program name.
/// Returns 0 on success, 1 on a verification failure, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace extverts
