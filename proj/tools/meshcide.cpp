#include <iostream>
#include <string>
#include <vector>

#include "meshcide/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return meshcide::cli::run(args, std::cout, std::cerr);
}
