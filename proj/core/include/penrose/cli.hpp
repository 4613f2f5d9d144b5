#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace penrose {

// Entry point shared by the installed binary and the tests.  Exit codes:
// 0 success, 1 domain/validation error or fixture mismatch, 2 usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace penrose
