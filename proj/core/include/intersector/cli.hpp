#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace intersector {

/// Exit codes: 0 success, 1 verification failure, 2 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace intersector
