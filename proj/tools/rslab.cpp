#include <iostream>
#include <string>
#include <vector>

#include "rslab/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rslab::run_command(args, std::cout, std::cerr);
}
