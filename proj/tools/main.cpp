#include <iostream>

#include "gstab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gstab::cli::run(std::move(args), std::cout, std::cerr);
}
