#include <iostream>

#include "pipn/cli.hpp"

int main(int argc, char** argv) {
  return pipn::run_cli({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
