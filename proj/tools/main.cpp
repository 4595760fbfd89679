#include <iostream>

#include "cyclecut/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cyclecut::run_command(args, std::cin, std::cout, std::cerr);
}
