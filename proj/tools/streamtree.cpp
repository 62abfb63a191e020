#include <iostream>

#include "streamtree/cli/commands.hpp"

int main(int argc, char** argv) {
  return streamtree::cli::main_entry(argc, argv, std::cout, std::cerr);
}
