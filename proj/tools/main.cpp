#include <iostream>
#include <string>
#include <vector>

#include "visicone/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return visicone::run_cli(args, std::cout, std::cerr);
}
