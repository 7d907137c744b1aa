#include <iostream>
#include <string>
#include <vector>

#include "finring/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return finring::cli::dispatch(args, std::cout, std::cerr);
}
