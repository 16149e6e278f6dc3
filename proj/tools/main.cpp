#include "corona/cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
  try {
    return corona::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return 3;
  }
}
