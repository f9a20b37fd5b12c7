#include <iostream>

#include "jring/cli/run.hpp"

int main(int argc, char** argv) {
  return jring::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
