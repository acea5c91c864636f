#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return csfe::cli::main_with_args(args, std::cin, std::cout, std::cerr);
}
