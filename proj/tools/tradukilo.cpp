#include <iostream>
#include <string>
#include <vector>

#include "pl0plus/driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pl0plus::run_compiler_cli(args, std::cout, std::cerr);
}
