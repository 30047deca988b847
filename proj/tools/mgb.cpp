#include <iostream>
#include <string>
#include <vector>

#include "mgb/io/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mgb::cli_dispatch(args, std::cin, std::cout, std::cerr);
}
