#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relcat {

/// Runs one command line (args exclude the program name). Exit codes: 0 pass,
/// 1 usage or input error, 2 refuted, 3 inconclusive.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relcat
