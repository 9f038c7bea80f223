#include <iostream>
#include <string>
#include <vector>

#include "jmotive/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jmotive::cli::execute(args, std::cout, std::cerr);
}
