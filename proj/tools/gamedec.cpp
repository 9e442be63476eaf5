#include <iostream>
#include <string>
#include <vector>

#include "gamedec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gamedec::run_cli(std::move(args), std::cout, std::cerr);
}
