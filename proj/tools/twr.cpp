#include <iostream>

#include "twr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return twr::run_command(args, std::cout, std::cerr);
}
