#include <iostream>
#include <string>
#include <vector>

#include "miquel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return miquel::run_command(args, std::cout, std::cerr);
}
