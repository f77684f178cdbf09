#include <iostream>

#include "attractor/cli.hpp"

int main(int argc, char** argv) {
  return attractor::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
