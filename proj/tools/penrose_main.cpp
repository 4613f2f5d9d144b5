#include <iostream>
#include <vector>

#include "penrose/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return penrose::cli_main(args, std::cout, std::cerr);
}
