#include <iostream>
#include <string>
#include <vector>

#include "cutsig/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cutsig::cli::run(args, std::cout, std::cerr);
}
