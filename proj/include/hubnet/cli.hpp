#pragma once

#include <string>
#include <vector>

namespace hubnet {

// Entry point behind the hubnet binary; exposed so tests can drive the CLI
// in-process. Returns the process exit code: 0 success (warnings allowed),
// 1 usage error, 2 data error, 3 numerical failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace hubnet
