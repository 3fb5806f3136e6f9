#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace zsp {

/// Command-line entry point. args excludes the program name.
/// Exit codes: 0 success, 1 usage/argument/budget error, 2 verification failure.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace zsp
