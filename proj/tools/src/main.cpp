#include <iostream>

#include "frieze_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return frieze::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
