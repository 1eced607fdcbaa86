#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dirtile {

enum ExitCode { kExitOk = 0, kExitValidation = 1, kExitUsage = 2 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dirtile
