#include <iostream>
#include <string>
#include <vector>

#include "h10/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return h10::run_cli(args, std::cout, std::cerr);
}
