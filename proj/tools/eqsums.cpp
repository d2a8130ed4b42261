#include <iostream>

#include "eqsums/cli.hpp"

int main(int argc, char** argv) {
  return eqsums::cli::dispatch(argc, argv, std::cout, std::cerr);
}
