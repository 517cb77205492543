#include <iostream>

#include "stirval/cli.hpp"

int main(int argc, char** argv) {
  return stirval::cli::run(argc, argv, std::cout, std::cerr);
}
