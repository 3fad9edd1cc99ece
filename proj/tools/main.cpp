#include <iostream>
#include <string>
#include <vector>

#include "nonleighton/cli.hpp"

int main(int argc, char* argv[]) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nonleighton::run(args, std::cout, std::cerr);
}
