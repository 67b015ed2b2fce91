#include <iostream>
#include <string>
#include <vector>

#include "knaplat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return knaplat::run_cli(args, std::cout, std::cerr);
}
