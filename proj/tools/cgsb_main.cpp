#include <iostream>
#include <string>
#include <vector>

#include "cgsb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cgsb::run(args, std::cout, std::cerr);
}
