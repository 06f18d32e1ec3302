#include <iostream>

#include "modseries/cli.hpp"

int main(int argc, char** argv) {
  return modseries::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
