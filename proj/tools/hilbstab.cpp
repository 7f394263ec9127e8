#include <iostream>
#include <string>
#include <vector>

#include "hilbstab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hilbstab::cli::run(args, std::cout, std::cerr);
}
