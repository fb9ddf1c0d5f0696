#include <iostream>

#include "qrep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto const result = qrep::cli::run(args);
  std::cout << result.report.dump(2) << '\n';
  if (!result.summary.empty()) {
    std::cerr << result.summary << '\n';
  }
  return result.exit_code;
}
