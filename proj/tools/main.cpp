#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const permdeflate::cli::RunResult result = permdeflate::cli::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
