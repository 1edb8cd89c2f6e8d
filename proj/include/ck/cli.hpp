#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ck::cli {

// Runs one CLI invocation (args exclude the program name) against the
// given streams. Exit codes: 0 success/verified, 1 verification failure,
// 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ck::cli
