#pragma once

#include <string>
#include <vector>

namespace permdeflate::cli {

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Exit codes: 0 success, 1 negative answer from a predicate command,
/// 2 usage or parse error. `args` excludes the program name.
RunResult run(const std::vector<std::string>& args);

}  // namespace permdeflate::cli
