#pragma once

#include <string>
#include <vector>

namespace quatnf::cli {

struct Result {
  /// 0 success, 1 verification finding, 2 usage or parse error.
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command. `args` excludes the program name. `input` stands in
/// for stdin when a command reads expressions and none were given.
Result run(const std::vector<std::string>& args, const std::string& input = {});

}  // namespace quatnf::cli
