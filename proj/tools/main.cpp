#include <iostream>
#include <string>
#include <vector>

#include "o2sep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return o2sep::run_cli(args, std::cout, std::cerr);
}
