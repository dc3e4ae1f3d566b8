#include <iostream>

#include "fibmod_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fibmod::cli::run(args, std::cout, std::cerr);
}
