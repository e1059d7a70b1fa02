#include <iostream>

#include "shiner/commands.hpp"

int main(int argc, char** argv) {
  return shiner::cli::run_cli(argc, argv, std::cout, std::cerr);
}
