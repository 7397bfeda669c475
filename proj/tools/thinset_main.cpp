#include <iostream>
#include <vector>

#include "thinset/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return thinset::run_cli(args, std::cout, std::cerr);
}
