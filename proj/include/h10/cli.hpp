#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace h10 {

// Runs one CLI invocation. Returns the process exit code:
//   0  success / decided verdict
//   2  budget exhausted
//   1  usage, parse, or validation errors (diagnostics on err)
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace h10
