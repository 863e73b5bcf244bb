#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lowindex {

/// Runs one subcommand; `args` excludes the program name. Returns the exit
/// status: 0 success, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace lowindex
