#include <iostream>

#include "hausdim/cli/commands.hpp"

int main(int argc, char** argv) {
  return hausdim::cli::run_cli(argc, argv, std::cout, std::cerr);
}
