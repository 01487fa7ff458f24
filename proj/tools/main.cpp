#include <iostream>

#include "clift/cli.hpp"

int main(int argc, char** argv) {
  return clift::cli::run(argc, argv, std::cout, std::cerr);
}
