#include <iostream>

#include "crossnum/cli.hpp"

int main(int argc, char **argv) {
  return crossnum::run_cli(argc, argv, std::cout, std::cerr);
}
