#include <iostream>

#include "dirtile/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dirtile::run_cli(args, std::cout, std::cerr);
}
