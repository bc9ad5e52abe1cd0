#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace edcodes::cli {

enum ExitCode : int { Holds = 0, Fails = 1, Usage = 2, Guard = 3 };

// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace edcodes::cli
