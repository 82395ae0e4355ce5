#include <iostream>
#include <string>
#include <vector>

#include "forest_turan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return forest_turan::run_cli(args, std::cout, std::cerr);
}
