#include <iostream>

#include "menger/cli.hpp"

int main(int argc, char** argv) {
  return menger::run_cli(argc, argv, std::cout, std::cerr);
}
