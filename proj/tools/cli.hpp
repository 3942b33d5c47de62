#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kronecker::cli {

enum ExitCode : int { ok = 0, error = 1, property_fails = 2, undetermined = 3 };

/// Runs one command; `args` excludes the program name. Module arguments named "-" are read from `in`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kronecker::cli
