#include <iostream>
#include <string>
#include <vector>

#include "redchern/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return redchern::cli::run(args, std::cout, std::cerr);
}
