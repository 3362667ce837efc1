#include <iostream>
#include <string>
#include <vector>

#include "heckeforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return heckeforge::run_cli(args, std::cin, std::cout, std::cerr);
}
