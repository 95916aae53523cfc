#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace robinson {

namespace exit_code {
constexpr int feasible = 0;
constexpr int invalid = 1;
constexpr int usage = 2;
constexpr int infeasible = 3;
constexpr int internal = 4;
} // namespace exit_code

/// Runs one command line (without the program name). Never throws.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace robinson
