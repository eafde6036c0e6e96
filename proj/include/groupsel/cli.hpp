#pragma once

#include <string>
#include <vector>

namespace groupsel {

// Runs one subcommand; args are in natural order without the program name.
// Returns 0 on success, 1 on validation or usage errors, 2 on numerical
// failures.
int run_cli(std::vector<std::string> args);

}  // namespace groupsel
