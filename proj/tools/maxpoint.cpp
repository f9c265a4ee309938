#include <iostream>
#include <string>
#include <vector>

#include "maxpoint/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return maxpoint::cli::run(args, std::cout, std::cerr);
}
