#include <iostream>
#include <string>
#include <vector>

#include "fvect/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fvect::cli_run(std::move(args), std::cout, std::cerr);
}
