// geo3 — command-line driver; all logic lives in geo3/cli.hpp.
#include <iostream>
#include <string>
#include <vector>

#include "geo3/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return geo3::cli::run(std::move(args), std::cout, std::cerr);
}
