#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrkit {

// full command-line driver, factored out of main for in-process testing;
// returns the process exit code
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace arrkit
