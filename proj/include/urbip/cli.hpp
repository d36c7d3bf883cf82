#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace urbip {

/// Exit status: 0 analysis done (any verdict), 1 certificate rejected by
/// `verify`, 2 input error, 3 internal numerical failure.
/// `args` excludes the program name.
int cliMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace urbip
