#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgb {

// Runs one CLI invocation. Exit codes: 0 success, 1 verification mismatch,
// 2 undecidable comparison, 3 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgb
