#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "quatnf/cli.hpp"

namespace {

bool reads_stdin(const std::vector<std::string>& args) {
  if (args.empty()) return false;
  const std::string& verb = args[0];
  if (verb != "normalize" && verb != "check-normal" && verb != "zero-test") return false;
  // Positional arguments are expressions; without any, read stdin.
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "-") return true;
    if (a == "--help" || a == "-h") return false;
    if (a.rfind("--", 0) == 0) {
      if (a.find('=') == std::string::npos && a != "--tail-reduce" && a != "--strict-chain" && a != "--multilinear") ++i;
      continue;
    }
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string input;
  if (reads_stdin(args)) input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  const quatnf::cli::Result r = quatnf::cli::run(args, input);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
