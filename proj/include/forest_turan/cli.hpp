#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace forest_turan {

/// Runs the forest-turan command line. args excludes the program name.
/// Returns the process exit status: 0 success, 1 a verified statement
/// disagrees with the oracle, 2 bad input, 3 budget exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forest_turan
