#include <iostream>

#include "kclique/cli.hpp"

int main(int argc, char** argv) {
  return kclique::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
