#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crsing::cli {

/// Runs the command line (args excludes the program name). Returns the exit
/// code: 0 computed, 1 mathematical negative, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crsing::cli
