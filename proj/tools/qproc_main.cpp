#include <iostream>
#include <string>
#include <vector>

#include "qproc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qproc::cli::run(args, std::cout, std::cerr);
}
