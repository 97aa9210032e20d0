#include <iostream>

#include "ghostlength/cli.hpp"

int main(int argc, char** argv) {
  return ghostlength::cli::run_cli(argc, argv, std::cout, std::cerr);
}
