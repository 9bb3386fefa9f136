#include <iostream>

#include "drg/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return drg::cli::run(args, std::cout, std::cerr);
}
