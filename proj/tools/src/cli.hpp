#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace catcom::cli {

// Parses arguments (args[0] is the verb), runs the command and writes the
// report to out. Returns the exit code: 0 pass, 1 fail, 2 unknown, 3 input
// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catcom::cli
