#include <iostream>
#include <string>
#include <vector>

#include "ainfree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ainfree::cli_main(args, std::cout, std::cerr);
}
