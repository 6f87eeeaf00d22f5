#include <iostream>
#include <string>
#include <vector>

#include "ordrev/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ordrev::runCli(args, std::cout, std::cerr);
}
