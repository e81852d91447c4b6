#include <iostream>
#include <string>
#include <vector>

#include "transmit/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return transmit::cli::run(args, std::cout, std::cerr);
}
