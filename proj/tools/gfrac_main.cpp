#include <iostream>

#include "gfrac/commands.hpp"

int main(int argc, char** argv) {
  return gfrac::cli::run(argc, argv, std::cout, std::cerr);
}
