#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kfc {

// Command-line front end; returns the process exit status.
// 0 success, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace kfc
