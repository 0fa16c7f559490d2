#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidorbit {

/// Exit codes: 0 success, 1 a checked property failed, 2 usage or input
/// error, 3 size guard exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidorbit
