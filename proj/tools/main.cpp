#include <iostream>
#include <string>
#include <vector>

#include "permsing/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return permsing::cli::run(args, std::cout, std::cerr);
}
