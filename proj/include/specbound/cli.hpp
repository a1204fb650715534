#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specbound {

// Full command-line surface (bound / curve / scan / check-paper) with
// injectable streams so tests can drive it. Returns the process exit code:
// 0 ok, 1 check failure, 2 parse error, 3 size limit.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace specbound
