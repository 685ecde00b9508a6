#include <iostream>

#include "lfnerve/cli.hpp"

int main(int argc, char** argv) {
  const auto r = lfnerve::cli::run(argc, argv);
  std::cout << r.out;
  std::cerr << r.err;
  return r.status;
}
