#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arbor::cli {

enum ExitCode : int {
  ok = 0,
  parse_error = 2,
  precondition_failed = 3,
  budget_exhausted = 4,
  verification_failed = 5,
};

// Runs one command. argv[0] is the program name.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arbor::cli
