#include <iostream>

#include "wpvol/cli.hpp"

int main(int argc, char** argv) {
  return wpvol::cli::run(argc, argv, std::cout, std::cerr);
}
