#include <iostream>

#include "lcsud/cli.hpp"

int main(int argc, char** argv) {
  return lcsud::run_cli(argc, argv, std::cout, std::cerr);
}
