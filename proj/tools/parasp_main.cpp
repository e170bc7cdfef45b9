#include <iostream>
#include <string>
#include <vector>

#include "parasp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return parasp::cli::run(args, std::cout, std::cerr);
}
