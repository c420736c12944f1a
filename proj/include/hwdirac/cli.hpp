#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hwdirac {

/// Subcommands classify, scan and verify. args excludes the program name.
/// Exit status: 0 decided / passed, 1 invalid input or failing suite, 2 Boundary or Undetermined.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hwdirac
