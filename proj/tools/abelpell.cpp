#include <iostream>
#include <string>
#include <vector>

#include "abelpell/cli.hpp"

int main(int argc, char** argv) {
  const abel::cli::RunResult r = abel::cli::run_args(std::vector<std::string>(argv + 1, argv + argc));
  if (!r.written_to_file) std::cout << r.output;
  std::cerr << r.diagnostics;
  return r.exit_code;
}
