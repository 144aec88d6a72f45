#include <iostream>

#include "trisect/cli.hpp"

int main(int argc, char** argv) {
  return trisect::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
